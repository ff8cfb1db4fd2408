//! Regenerate the strange-duality pairing from scratch: classify all
//! fourteen weight systems in parallel and print the pairing the search
//! discovers, then check it is an involution matching the embedded table.
//!
//!     cargo run --example strange_dual_table

use rayon::prelude::*;
use strange_duality::{classify, table1, ClassificationResult, Result};

fn main() {
    let records = table1();
    let results: Vec<Result<ClassificationResult>> = records
        .par_iter()
        .map(|rec| classify(&rec.weights))
        .collect();

    println!(
        "{:<6} {:<14} {:>3}   {:<6} {:<10}",
        "name", "a (sorted)", "h", "dual", "involution"
    );
    let mut discovered = Vec::new();
    for (rec, res) in records.iter().zip(results) {
        let r = res.expect("table weights are in range");
        assert!(r.is_exceptional, "{} must classify as exceptional", rec.name);
        let dual = r.dual_name.expect("dual identified");
        discovered.push((rec.name, dual));
        let [a1, a2, a3] = rec.weights.a();
        println!(
            "{:<6} {:<14} {:>3}   {:<6} {}",
            rec.name,
            format!("({a1},{a2},{a3})"),
            rec.weights.h(),
            dual,
            if dual == rec.name { "self-dual" } else { "" }
        );
        assert_eq!(dual, rec.dual_name, "{}: dual matches the table", rec.name);
    }

    // duality is an involution: dual(dual(X)) = X
    for &(name, dual) in &discovered {
        let (_, back) = discovered
            .iter()
            .find(|(n, _)| *n == dual)
            .expect("dual is one of the fourteen");
        assert_eq!(*back, name, "dual of {dual} must be {name}");
    }
    println!("\npairing is an involution on the fourteen names ✓");
}
