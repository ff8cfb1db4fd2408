//! Parse a TSV weight list (the `strange-dual batch --input` format) and
//! classify every entry in parallel, keeping input order in the output.
//!
//!     cargo run --example batch_from_tsv
//!
//! The same run through the CLI:
//!     strange-dual batch --input list.tsv --tsv

use std::io::Cursor;

use rayon::prelude::*;
use strange_duality::{classify, load_weight_list, ClassificationResult, Result};

const LIST: &str = "\
# weight lists are 'a1<TAB>a2<TAB>a3', optionally '<TAB>label';
# blank lines and #-comments are skipped
6\t14\t21\tdolgachev-triple-2-3-7
3\t4\t4
1\t1\t1\tnegative-control

1\t2\t2\tanother-negative
";

fn main() {
    let entries = load_weight_list(Cursor::new(LIST)).expect("well-formed list");
    println!("parsed {} entries\n", entries.len());

    let results: Vec<Result<ClassificationResult>> = entries
        .par_iter()
        .map(|e| classify(&e.weight))
        .collect();

    println!(
        "{:<10} {:>3}   {:<12} {:<6} {}",
        "weight", "h", "exceptional?", "dual", "label"
    );
    for (entry, res) in entries.iter().zip(results) {
        let r = res.expect("weights in range");
        let [a1, a2, a3] = entry.weight.a();
        println!(
            "{:<10} {:>3}   {:<12} {:<6} {}",
            format!("{},{},{}", a1, a2, a3),
            entry.weight.h(),
            r.is_exceptional,
            r.dual_name.unwrap_or("-"),
            entry.label.as_deref().unwrap_or("-")
        );
    }
}
