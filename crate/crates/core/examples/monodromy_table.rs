//! Monodromy divisors and real Milnor fibres of weighted homogeneous curves.

use eulerlink::monodromy::{check_fiber_congruences, reference_table, WeightedPoly};

fn main() -> eulerlink::Result<()> {
    for (name, f) in reference_table() {
        let r = check_fiber_congruences(&f)?;
        println!(
            "{name:<10} mu {:>2}  divisor {:<24} l(1) {}  l(-1) {}  chi+ {}  chi- {}",
            r.monodromy.mu,
            r.monodromy.divisor.to_string(),
            r.monodromy.l_one,
            r.monodromy.l_minus_one,
            r.real.chi_plus,
            r.real.chi_minus
        );
    }

    // Any reduced polynomial works: x^5 - y^5 with weights (1, 1).
    let f = WeightedPoly::from_int_terms((1, 1), 5, &[((5, 0), 1), ((0, 5), -1)])?;
    let r = check_fiber_congruences(&f)?;
    println!(
        "{f}: mu {}, chi+ {}, chi- {}",
        r.monodromy.mu, r.real.chi_plus, r.real.chi_minus
    );
    Ok(())
}
