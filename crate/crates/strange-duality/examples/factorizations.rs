//! Walk the raw factorization search for one weight, before any
//! singularity analysis: every candidate D is a non-negative matrix whose
//! columns sum to (a1, a2, a3); the unimodular ones with C = B_a·D⁻¹ ≥ 0
//! survive.
//!
//!     cargo run --example factorizations            # S_12's weight (3,4,5)
//!     cargo run --example factorizations -- 6 14 21

use strange_duality::{build_b, candidate_count, det3, semi_dual_candidates, Weight};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("weights are positive integers"))
        .collect();
    let a = match args.as_slice() {
        [] => [3, 4, 5],
        [a1, a2, a3] => [*a1, *a2, *a3],
        _ => panic!("expected three weights a1 a2 a3"),
    };
    let w = Weight::new(a).expect("valid weight");
    let b = build_b(&w);
    println!("weight system {w}");
    println!("B_a =\n{b}");
    println!("det B_a = {} (always equals h)", det3(&b));
    println!(
        "column-sum candidates for D: {}",
        candidate_count(&w)
    );

    let sols = semi_dual_candidates(&w).expect("search within bounds");
    println!("surviving factorizations: {}\n", sols.len());
    for (k, s) in sols.iter().enumerate() {
        println!("#{}  det D = {}", k + 1, det3(&s.d));
        for i in 0..3 {
            let cr: Vec<String> = s.c.row(i).iter().map(|x| x.to_string()).collect();
            let dr: Vec<String> = s.d.row(i).iter().map(|x| x.to_string()).collect();
            let mid = if i == 1 { "·" } else { " " };
            println!("    [{}] {} [{}]", cr.join(" "), mid, dr.join(" "));
        }
        println!(
            "    ǎ = row sums of D = {:?}, ȟ = {}\n",
            s.dual_weight,
            s.dual_degree()
        );
    }
}
