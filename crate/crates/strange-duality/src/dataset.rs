use std::io::BufRead;
use std::sync::OnceLock;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::matrix::IMat3;
use crate::singularity::milnor_orlik;
use crate::weight::Weight;

/// One of the fourteen exceptional unimodal singularities, as tabulated:
/// name, normal form (as an exponent matrix), weight system, Dolgachev and
/// Gabrielov triples, and the strange-dual partner.
#[derive(Clone, Debug)]
pub struct SingularityRecord {
    pub name: &'static str,
    /// Exponent matrix of the normal-form polynomial, rows in printed order.
    pub normal_form: IMat3,
    /// Weight of each *variable* (x, y, z) in the normal form. The printed
    /// variable order does not always align with the sorted weight triple
    /// (e.g. x⁴+y⁵+z² carries x↦5, y↦4), so the assignment is stored
    /// explicitly and validated against quasi-homogeneity at load time.
    pub variable_weights: [u64; 3],
    pub weights: Weight,
    pub mu: u64,
    pub dolgachev: [u64; 3],
    pub gabrielov: [u64; 3],
    pub dual_name: &'static str,
}

struct Row {
    name: &'static str,
    normal_form: [[i64; 3]; 3],
    variable_weights: [u64; 3],
    weights: [u64; 3],
    h: u64,
    mu: u64,
    dolgachev: [u64; 3],
    gabrielov: [u64; 3],
    dual_name: &'static str,
}

// Three rows are printed with a comma where the degree separator belongs
// ("(3,5,9,18)", "(3,4,8,16)", "(4,5,6,16)"); they are stored as weight
// systems (3,5,9;18), (3,4,8;16), (4,5,6;16), which the h = a1+a2+a3+1
// identity confirms.
const ROWS: [Row; 14] = [
    Row {
        name: "E_12",
        normal_form: [[3, 0, 0], [0, 7, 0], [0, 0, 2]],
        variable_weights: [14, 6, 21],
        weights: [6, 14, 21],
        h: 42,
        mu: 12,
        dolgachev: [2, 3, 7],
        gabrielov: [2, 3, 7],
        dual_name: "E_12",
    },
    Row {
        name: "E_13",
        normal_form: [[3, 0, 0], [1, 5, 0], [0, 0, 2]],
        variable_weights: [10, 4, 15],
        weights: [4, 10, 15],
        h: 30,
        mu: 13,
        dolgachev: [2, 4, 5],
        gabrielov: [2, 3, 8],
        dual_name: "Z_11",
    },
    Row {
        name: "E_14",
        normal_form: [[3, 0, 0], [0, 8, 0], [0, 0, 2]],
        variable_weights: [8, 3, 12],
        weights: [3, 8, 12],
        h: 24,
        mu: 14,
        dolgachev: [3, 3, 4],
        gabrielov: [2, 3, 9],
        dual_name: "Q_10",
    },
    Row {
        name: "Z_11",
        normal_form: [[3, 1, 0], [0, 5, 0], [0, 0, 2]],
        variable_weights: [8, 6, 15],
        weights: [6, 8, 15],
        h: 30,
        mu: 11,
        dolgachev: [2, 3, 8],
        gabrielov: [2, 4, 5],
        dual_name: "E_13",
    },
    Row {
        name: "Z_12",
        normal_form: [[3, 1, 0], [1, 4, 0], [0, 0, 2]],
        variable_weights: [6, 4, 11],
        weights: [4, 6, 11],
        h: 22,
        mu: 12,
        dolgachev: [2, 4, 6],
        gabrielov: [2, 4, 6],
        dual_name: "Z_12",
    },
    Row {
        name: "Z_13",
        normal_form: [[3, 1, 0], [0, 6, 0], [0, 0, 2]],
        variable_weights: [5, 3, 9],
        weights: [3, 5, 9],
        h: 18,
        mu: 13,
        dolgachev: [3, 3, 5],
        gabrielov: [2, 4, 7],
        dual_name: "Q_11",
    },
    Row {
        name: "W_12",
        normal_form: [[4, 0, 0], [0, 5, 0], [0, 0, 2]],
        variable_weights: [5, 4, 10],
        weights: [4, 5, 10],
        h: 20,
        mu: 12,
        dolgachev: [2, 5, 5],
        gabrielov: [2, 5, 5],
        dual_name: "W_12",
    },
    Row {
        name: "W_13",
        normal_form: [[4, 0, 0], [1, 4, 0], [0, 0, 2]],
        variable_weights: [4, 3, 8],
        weights: [3, 4, 8],
        h: 16,
        mu: 13,
        dolgachev: [3, 4, 4],
        gabrielov: [2, 5, 6],
        dual_name: "S_11",
    },
    Row {
        name: "Q_10",
        normal_form: [[3, 0, 0], [0, 4, 0], [0, 1, 2]],
        variable_weights: [8, 6, 9],
        weights: [6, 8, 9],
        h: 24,
        mu: 10,
        dolgachev: [2, 3, 9],
        gabrielov: [3, 3, 4],
        dual_name: "E_14",
    },
    Row {
        name: "Q_11",
        normal_form: [[3, 0, 0], [0, 2, 1], [1, 0, 3]],
        variable_weights: [6, 7, 4],
        weights: [4, 6, 7],
        h: 18,
        mu: 11,
        dolgachev: [2, 4, 7],
        gabrielov: [3, 3, 5],
        dual_name: "Z_13",
    },
    Row {
        name: "Q_12",
        normal_form: [[3, 0, 0], [0, 5, 0], [0, 1, 2]],
        variable_weights: [5, 3, 6],
        weights: [3, 5, 6],
        h: 15,
        mu: 12,
        dolgachev: [3, 3, 6],
        gabrielov: [3, 3, 6],
        dual_name: "Q_12",
    },
    Row {
        name: "S_11",
        normal_form: [[4, 0, 0], [0, 2, 1], [1, 0, 2]],
        variable_weights: [4, 5, 6],
        weights: [4, 5, 6],
        h: 16,
        mu: 11,
        dolgachev: [2, 5, 6],
        gabrielov: [3, 4, 4],
        dual_name: "W_13",
    },
    Row {
        name: "S_12",
        normal_form: [[3, 1, 0], [0, 2, 1], [1, 0, 2]],
        variable_weights: [3, 4, 5],
        weights: [3, 4, 5],
        h: 13,
        mu: 12,
        dolgachev: [3, 4, 5],
        gabrielov: [3, 4, 5],
        dual_name: "S_12",
    },
    Row {
        name: "U_12",
        normal_form: [[3, 0, 0], [0, 3, 0], [0, 0, 4]],
        variable_weights: [4, 4, 3],
        weights: [3, 4, 4],
        h: 12,
        mu: 12,
        dolgachev: [4, 4, 4],
        gabrielov: [4, 4, 4],
        dual_name: "U_12",
    },
];

/// The fourteen embedded records, fully cross-validated on first access:
/// degree identity h = a1+a2+a3+1, quasi-homogeneity of each normal form
/// under its stored variable-weight assignment, variable weights being a
/// permutation of the weight triple, μ agreeing with both the name
/// subscript and the Milnor–Orlik product, duality being an involution,
/// and Dolgachev/Gabrielov triples interchanging across dual pairs.
pub fn table1() -> &'static [SingularityRecord; 14] {
    static TABLE: OnceLock<[SingularityRecord; 14]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let records: [SingularityRecord; 14] = ROWS.each_ref().map(|row| {
            let weights = Weight::new(row.weights)
                .expect("embedded weights are positive");
            assert_eq!(weights.h(), row.h, "{}: h = a1+a2+a3+1", row.name);
            SingularityRecord {
                name: row.name,
                normal_form: IMat3::from_i64(row.normal_form),
                variable_weights: row.variable_weights,
                weights,
                mu: row.mu,
                dolgachev: row.dolgachev,
                gabrielov: row.gabrielov,
                dual_name: row.dual_name,
            }
        });
        for r in &records {
            validate_record(r, &records);
        }
        records
    })
}

fn validate_record(r: &SingularityRecord, all: &[SingularityRecord; 14]) {
    // the variable-weight assignment is a permutation of the weight triple
    let mut vw = r.variable_weights;
    vw.sort_unstable();
    assert_eq!(vw, r.weights.sorted(), "{}: variable weights", r.name);
    // quasi-homogeneity: normal_form · variable_weightsᵀ = (h,h,h)ᵀ
    let h = BigInt::from(r.weights.h());
    for i in 0..3 {
        let deg: BigInt = (0..3)
            .map(|j| r.normal_form.get(i, j) * BigInt::from(r.variable_weights[j]))
            .sum();
        assert_eq!(deg, h, "{}: monomial {} is quasi-homogeneous", r.name, i);
    }
    // μ = name subscript = Milnor–Orlik product of the weight system
    let subscript: u64 = r.name[2..].parse().expect("name subscript");
    assert_eq!(r.mu, subscript, "{}: μ is the name subscript", r.name);
    assert_eq!(
        milnor_orlik(&r.weights),
        BigRational::from_integer(BigInt::from(r.mu)),
        "{}: Milnor–Orlik product",
        r.name
    );
    // duality is an involution interchanging Dolgachev and Gabrielov numbers
    let dual = all
        .iter()
        .find(|s| s.name == r.dual_name)
        .unwrap_or_else(|| panic!("{}: dual {} exists", r.name, r.dual_name));
    assert_eq!(dual.dual_name, r.name, "{}: dual of dual", r.name);
    assert_eq!(dual.dolgachev, r.gabrielov, "{}: γ = δ̌", r.name);
    assert_eq!(dual.gabrielov, r.dolgachev, "{}: δ = γ̌", r.name);
}

/// Looks up an embedded record by name (e.g. "E_12").
pub fn record(name: &str) -> Option<&'static SingularityRecord> {
    table1().iter().find(|r| r.name == name)
}

/// One line of a user-supplied weight list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightListEntry {
    pub weight: Weight,
    pub label: Option<String>,
}

/// Parses a TSV weight list: three positive integers per line, optionally
/// followed by a label, tab-separated. Lines starting with '#' are
/// comments; blank lines are skipped; LF and CRLF both accepted. Entries
/// come back in file order, duplicates preserved; malformed lines error
/// with their 1-based line number.
pub fn load_weight_list(source: impl BufRead) -> Result<Vec<WeightListEntry>> {
    let mut entries = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!(
                    "expected 3 weights and an optional label, got {} fields",
                    fields.len()
                ),
            });
        }
        let mut nums = [0u64; 3];
        for (k, field) in fields[..3].iter().enumerate() {
            nums[k] = field.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("'{}' is not a positive integer", field),
            })?;
        }
        let weight = Weight::new(nums).map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let label = fields
            .get(3)
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty());
        entries.push(WeightListEntry { weight, label });
    }
    Ok(entries)
}
