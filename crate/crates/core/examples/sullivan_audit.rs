//! Parity of links and constancy of local invariants along strata, driven
//! through the same entry point as the command line.

fn main() {
    for args in [
        ["eulerlink", "audit", "--sullivan", "theta_cone"],
        ["eulerlink", "audit", "--constancy", "whitney_umbrella"],
    ] {
        let (out, code) = eulerlink::cli::run(args);
        println!("$ {}", args[1..].join(" "));
        print!("{out}");
        println!("exit {code}\n");
    }
}
