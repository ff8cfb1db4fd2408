//! Decide "isolated critical point at the origin?" for a gallery of
//! three-monomial polynomials, and cross-check the normative
//! stratification engine against the Milnor-number engine.
//!
//!     cargo run --example isolated_or_not

use strange_duality::{
    exponent_matrix_to_poly, isolated_at_origin, milnor_number, IMat3,
};

fn main() {
    // (description, exponent matrix of f = x^r1 + x^r2 + x^r3, expected)
    let gallery: [(&str, [[i64; 3]; 3], bool); 6] = [
        ("Brieskorn–Pham x⁷+y³+z²   (E_12)", [[7, 0, 0], [0, 3, 0], [0, 0, 2]], true),
        ("chain x³+x y⁵+z²          (E_13)", [[3, 0, 0], [1, 5, 0], [0, 0, 2]], true),
        ("x⁵+y²z+z²                 (W_12)", [[5, 0, 0], [0, 2, 1], [0, 0, 2]], true),
        ("loop x²y+y²z+z²x", [[2, 1, 0], [0, 2, 1], [1, 0, 2]], true),
        ("xyz(x+y+z): singular along lines", [[2, 1, 1], [1, 2, 1], [1, 1, 2]], false),
        ("x+y+z: no critical point at 0", [[1, 0, 0], [0, 1, 0], [0, 0, 1]], false),
    ];

    for (what, e, expected) in gallery {
        let c = IMat3::from_i64(e);
        let f = exponent_matrix_to_poly(&c).expect("nonsingular exponent matrix");
        let isolated = isolated_at_origin(&c).expect("within engine bounds");
        let milnor = milnor_number(&c).expect("within engine bounds");
        println!("f = {f}");
        println!("  {what}");
        println!("  stratification engine: isolated = {isolated}");
        match milnor.mu {
            Some(mu) => println!(
                "  Milnor engine:         dim_Q Q[[x,y,z]]/J(f) = {mu} (finite)"
            ),
            None => println!(
                "  Milnor engine:         Jacobian ideal not zero-dimensional"
            ),
        }
        assert_eq!(isolated, expected, "known verdict for {what}");
        assert_eq!(
            isolated,
            milnor.predicts_isolated(),
            "the two engines must agree"
        );
        println!("  engines agree ✓\n");
    }
}
