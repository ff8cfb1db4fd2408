//! Classify one weight system end to end: search the factorizations
//! B_a = C·D, decide isolatedness for each, and name the strange dual.
//!
//!     cargo run --example classify_weight            # E_12's weight
//!     cargo run --example classify_weight -- 4 10 15 # E_13's weight
//!     cargo run --example classify_weight -- 1 1 1   # a negative control

use strange_duality::report::group_classes;
use strange_duality::{build_b, classify, Weight};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("weights are positive integers"))
        .collect();
    let a = match args.as_slice() {
        [] => [6, 14, 21],
        [a1, a2, a3] => [*a1, *a2, *a3],
        _ => panic!("expected three weights a1 a2 a3"),
    };
    let w = Weight::new(a).expect("valid weight");
    println!("weight system  {w}");
    println!("B_a =\n{}", build_b(&w));

    let r = classify(&w).expect("search within bounds");
    println!(
        "{} factorization(s) B_a = C·D with the required positivity",
        r.solutions.len()
    );

    let groups = group_classes(&r.solutions).expect("decided solutions");
    for (k, g) in groups.iter().enumerate() {
        println!(
            "\nclass {} ({} pair(s)) — canonical C:\n{}",
            k + 1,
            g.members.len(),
            g.canonical.as_matrix()
        );
        println!("  dual weight ǎ (sorted) = {:?}, ȟ = {}", g.dual_weight_sorted, g.dual_degree);
        println!("  isolated critical point at origin: {}", g.isolated);
        if let Some(mu) = g.mu {
            println!("  μ(f_C) = {mu}  (Milnor–Orlik for ǎ: {})", g.orlik.clone().unwrap());
        }
        if let Some(d) = &g.decomposition {
            println!("  invertible-polynomial shape: {d}");
        }
        if let Some(name) = g.dual_name {
            println!("  strange dual: {name}");
        }
    }

    match (r.is_exceptional, r.dual_name) {
        (true, Some(name)) => println!("\n=> exceptional; strange dual is {name}"),
        (true, None) => println!("\n=> exceptional (dual not in the embedded table)"),
        (false, _) => println!("\n=> not a weight system of an exceptional unimodal singularity"),
    }
}
