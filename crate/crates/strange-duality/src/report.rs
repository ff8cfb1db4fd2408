use num::BigRational;
use serde_json::{Map, Value};

use crate::dataset::{table1, WeightListEntry};
use crate::duality::{classify, identify_dual, ClassificationResult};
use crate::enumerate::{dual_weight_system, SemiDualSolution};
use crate::error::Result;
use crate::matrix::{canonicalize, CanonicalKey, IMat3};
use crate::singularity::{atomic_decomposition, milnor_number, milnor_orlik, quasi_weights};
use crate::weight::Weight;
use crate::{groebner, singularity};

/// Wraps a result payload in the standard envelope. Every integer in the
/// payload is a decimal string so consumers never face precision loss, and
/// the field order is fixed, so output round-trips byte-identically.
pub fn envelope(command: &str, input: Value, result: Value, elapsed_ms: u128) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), Value::String(command.into()));
    m.insert("input".into(), input);
    m.insert("result".into(), result);
    let mut engines = Map::new();
    engines.insert(
        "stratification".into(),
        Value::String(singularity::ENGINE_VERSION.into()),
    );
    engines.insert(
        "milnor_oracle".into(),
        Value::String(groebner::ENGINE_VERSION.into()),
    );
    m.insert("engines".into(), Value::Object(engines));
    m.insert("elapsed_ms".into(), Value::String(elapsed_ms.to_string()));
    Value::Object(m)
}

pub fn js(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn jtriple(t: &[u64; 3]) -> Value {
    Value::Array(t.iter().map(js).collect())
}

pub fn jmat(m: &IMat3) -> Value {
    Value::Array(
        (0..3)
            .map(|i| Value::Array((0..3).map(|j| js(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn jweight(w: &Weight) -> Value {
    let mut m = Map::new();
    m.insert("a".into(), jtriple(&w.a()));
    m.insert("h".into(), js(w.h()));
    Value::Object(m)
}

fn jsolution(s: &SemiDualSolution) -> Value {
    let mut m = Map::new();
    m.insert("c".into(), jmat(&s.c));
    m.insert("d".into(), jmat(&s.d));
    m.insert("dual_weight".into(), jtriple(&s.dual_weight));
    m.insert("dual_degree".into(), js(s.dual_degree()));
    m.insert(
        "isolated".into(),
        s.isolated.map_or(Value::Null, Value::Bool),
    );
    Value::Object(m)
}

fn jopt(v: Option<impl ToString>) -> Value {
    v.map_or(Value::Null, js)
}

/// One canonical-C equivalence class among a weight's solutions.
pub struct ClassGroup {
    pub canonical: CanonicalKey,
    pub members: Vec<usize>,
    pub isolated: bool,
    pub dual_weight_sorted: [u64; 3],
    pub dual_degree: u64,
    pub mu: Option<u64>,
    pub orlik: Option<BigRational>,
    pub dual_name: Option<&'static str>,
    pub decomposition: Option<String>,
}

/// Groups decided solutions by canonical key of C. Solutions arrive sorted
/// by that key, so groups are consecutive runs. Isolatedness, the dual
/// weight multiset and μ are class invariants (class members differ by row
/// order and variable permutation); the uniformity is asserted.
pub fn group_classes(solutions: &[SemiDualSolution]) -> Result<Vec<ClassGroup>> {
    let mut groups: Vec<ClassGroup> = Vec::new();
    let mut start = 0usize;
    while start < solutions.len() {
        let key = canonicalize(&solutions[start].c);
        let mut end = start + 1;
        while end < solutions.len() && canonicalize(&solutions[end].c) == key {
            end += 1;
        }
        let rep = &solutions[start];
        let isolated = rep.isolated.expect("solutions must be decided");
        for s in &solutions[start..end] {
            assert_eq!(s.isolated, Some(isolated), "class-invariant verdict");
        }
        let mut dual_sorted = rep.dual_weight;
        dual_sorted.sort_unstable();
        let (mu, orlik, dual_name) = if isolated {
            let mu = milnor_number(&rep.c)?.mu;
            let orlik = Some(milnor_orlik(&dual_weight_system(rep)?));
            (mu, orlik, identify_dual(rep)?)
        } else {
            (None, None, None)
        };
        groups.push(ClassGroup {
            canonical: key,
            members: (start..end).collect(),
            isolated,
            dual_weight_sorted: dual_sorted,
            dual_degree: rep.dual_degree(),
            mu,
            orlik,
            dual_name,
            decomposition: atomic_decomposition(&rep.c).map(|d| d.to_string()),
        });
        start = end;
    }
    Ok(groups)
}

fn jclass(g: &ClassGroup, solutions: &[SemiDualSolution], with_pairs: bool) -> Value {
    let mut m = Map::new();
    m.insert("canonical_c".into(), jmat(&g.canonical.as_matrix()));
    m.insert("isolated".into(), Value::Bool(g.isolated));
    m.insert("dual_weight".into(), jtriple(&g.dual_weight_sorted));
    m.insert("dual_degree".into(), js(g.dual_degree));
    m.insert("mu".into(), jopt(g.mu));
    m.insert("milnor_orlik".into(), jopt(g.orlik.clone()));
    m.insert("dual_name".into(), jopt(g.dual_name));
    m.insert("decomposition".into(), jopt(g.decomposition.clone()));
    m.insert("pair_count".into(), js(g.members.len()));
    if with_pairs {
        m.insert(
            "pairs".into(),
            Value::Array(
                g.members
                    .iter()
                    .map(|&i| jsolution(&solutions[i]))
                    .collect(),
            ),
        );
    } else {
        m.insert("representative".into(), jsolution(&solutions[g.members[0]]));
    }
    Value::Object(m)
}

/// Result payload of `classify`.
pub fn classify_payload(
    r: &ClassificationResult,
    all_solutions: bool,
    oracle: bool,
) -> Result<Value> {
    let groups = group_classes(&r.solutions)?;
    let mut m = Map::new();
    m.insert("weight".into(), jweight(&r.weight));
    m.insert("exceptional".into(), Value::Bool(r.is_exceptional));
    m.insert("dual_name".into(), jopt(r.dual_name));
    m.insert("solution_count".into(), js(r.solutions.len()));
    m.insert(
        "isolated_classes".into(),
        Value::Array(
            groups
                .iter()
                .filter(|g| g.isolated)
                .map(|g| jclass(g, &r.solutions, false))
                .collect(),
        ),
    );
    if all_solutions {
        m.insert(
            "solutions".into(),
            Value::Array(r.solutions.iter().map(jsolution).collect()),
        );
    }
    if oracle {
        let mut agree = true;
        for s in &r.solutions {
            let milnor = milnor_number(&s.c)?;
            if s.isolated != Some(milnor.predicts_isolated()) {
                agree = false;
            }
        }
        let mut o = Map::new();
        o.insert("checked".into(), js(r.solutions.len()));
        o.insert("engines_agree".into(), Value::Bool(agree));
        m.insert("oracle".into(), Value::Object(o));
    }
    Ok(Value::Object(m))
}

/// TSV row shared by `classify` and `batch`: weight, h, exceptional, dual
/// name, canonical C of the isolated class, sorted ǎ, μ ('-' when absent).
pub fn classification_tsv_row(r: &ClassificationResult) -> Result<String> {
    let groups = group_classes(&r.solutions)?;
    let iso: Vec<&ClassGroup> = groups.iter().filter(|g| g.isolated).collect();
    let dash = "-".to_string();
    let canonical = iso
        .first()
        .map(|g| {
            let m = g.canonical.as_matrix();
            let mut parts = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    parts.push(m.get(i, j).to_string());
                }
            }
            parts.join(",")
        })
        .unwrap_or_else(|| dash.clone());
    let dual_weight = iso
        .first()
        .map(|g| {
            g.dual_weight_sorted
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .unwrap_or_else(|| dash.clone());
    let mu = iso
        .first()
        .and_then(|g| g.mu)
        .map_or(dash.clone(), |m| m.to_string());
    let [a1, a2, a3] = r.weight.a();
    Ok(format!(
        "{},{},{}\t{}\t{}\t{}\t{}\t{}\t{}",
        a1,
        a2,
        a3,
        r.weight.h(),
        r.is_exceptional,
        r.dual_name.unwrap_or("-"),
        canonical,
        dual_weight,
        mu
    ))
}

/// Result payload of `batch`: one row per input entry, in input order.
pub fn batch_payload(entries: &[WeightListEntry]) -> Result<Value> {
    use rayon::prelude::*;
    let results: Vec<Result<ClassificationResult>> = entries
        .par_iter()
        .map(|e| classify(&e.weight))
        .collect();
    let mut rows = Vec::with_capacity(entries.len());
    for (entry, res) in entries.iter().zip(results) {
        let r = res?;
        let groups = group_classes(&r.solutions)?;
        let iso = groups.iter().find(|g| g.isolated);
        let mut m = Map::new();
        m.insert(
            "label".into(),
            entry.label.as_deref().map_or(Value::Null, |l| js(l)),
        );
        m.insert("weight".into(), jweight(&entry.weight));
        m.insert("exceptional".into(), Value::Bool(r.is_exceptional));
        m.insert("dual_name".into(), jopt(r.dual_name));
        m.insert(
            "canonical_c".into(),
            iso.map_or(Value::Null, |g| jmat(&g.canonical.as_matrix())),
        );
        m.insert(
            "dual_weight".into(),
            iso.map_or(Value::Null, |g| jtriple(&g.dual_weight_sorted)),
        );
        m.insert("mu".into(), jopt(iso.and_then(|g| g.mu)));
        rows.push(Value::Object(m));
    }
    let mut m = Map::new();
    m.insert("count".into(), js(entries.len()));
    m.insert("rows".into(), Value::Array(rows));
    Ok(Value::Object(m))
}

/// TSV rows of `batch`: the classification row plus a trailing label column.
pub fn batch_tsv(entries: &[WeightListEntry]) -> Result<String> {
    use rayon::prelude::*;
    let results: Vec<Result<ClassificationResult>> = entries
        .par_iter()
        .map(|e| classify(&e.weight))
        .collect();
    let mut out = String::new();
    for (entry, res) in entries.iter().zip(results) {
        let r = res?;
        out.push_str(&classification_tsv_row(&r)?);
        out.push('\t');
        out.push_str(entry.label.as_deref().unwrap_or("-"));
        out.push('\n');
    }
    Ok(out)
}

/// Oracle block of `check-isolated --oracle`.
pub fn oracle_payload(c: &IMat3, isolated: bool) -> Result<Value> {
    let milnor = milnor_number(c)?;
    let qw = quasi_weights(c);
    let mut m = Map::new();
    m.insert("milnor_finite".into(), Value::Bool(milnor.finite));
    m.insert("mu".into(), jopt(milnor.mu));
    m.insert("quasi_homogeneous".into(), Value::Bool(qw.is_some()));
    match &qw {
        Some((w, d)) => {
            m.insert(
                "weights".into(),
                Value::Array(w.iter().map(js).collect()),
            );
            m.insert("degree".into(), js(d));
            m.insert(
                "milnor_orlik".into(),
                js(crate::singularity::orlik_product(w, d)),
            );
        }
        None => {
            m.insert("weights".into(), Value::Null);
            m.insert("degree".into(), Value::Null);
            m.insert("milnor_orlik".into(), Value::Null);
        }
    }
    m.insert(
        "engines_agree".into(),
        Value::Bool(isolated == milnor.predicts_isolated()),
    );
    Ok(Value::Object(m))
}

/// Result payload of `check-isolated`.
pub fn check_isolated_payload(c: &IMat3, isolated: bool, oracle: bool) -> Result<Value> {
    let mut m = Map::new();
    m.insert("isolated".into(), Value::Bool(isolated));
    m.insert(
        "decomposition".into(),
        jopt(atomic_decomposition(c).map(|d| d.to_string())),
    );
    if oracle {
        m.insert("oracle".into(), oracle_payload(c, isolated)?);
    }
    Ok(Value::Object(m))
}

/// TSV line of `check-isolated`: isolated, finite, μ, Milnor–Orlik, agree.
pub fn check_isolated_tsv(c: &IMat3, isolated: bool, oracle: bool) -> Result<String> {
    if !oracle {
        return Ok(format!("{}\t-\t-\t-\t-", isolated));
    }
    let milnor = milnor_number(c)?;
    let orlik = quasi_weights(c)
        .map(|(w, d)| crate::singularity::orlik_product(&w, &d).to_string())
        .unwrap_or_else(|| "-".into());
    Ok(format!(
        "{}\t{}\t{}\t{}\t{}",
        isolated,
        milnor.finite,
        milnor.mu.map_or("-".into(), |m| m.to_string()),
        orlik,
        isolated == milnor.predicts_isolated()
    ))
}

/// Result payload of `table`: one section per embedded record, with every
/// (C, D) pair grouped by canonical C class.
pub fn table_payload() -> Result<Value> {
    use rayon::prelude::*;
    let records = table1();
    let results: Vec<Result<ClassificationResult>> = records
        .par_iter()
        .map(|rec| classify(&rec.weights))
        .collect();
    let mut sections = Vec::with_capacity(records.len());
    for (rec, res) in records.iter().zip(results) {
        let r = res?;
        let groups = group_classes(&r.solutions)?;
        let mut m = Map::new();
        m.insert("name".into(), js(rec.name));
        m.insert("weight".into(), jweight(&rec.weights));
        m.insert("dual_name".into(), jopt(r.dual_name));
        m.insert(
            "classes".into(),
            Value::Array(
                groups
                    .iter()
                    .map(|g| jclass(g, &r.solutions, true))
                    .collect(),
            ),
        );
        sections.push(Value::Object(m));
    }
    let mut m = Map::new();
    m.insert("sections".into(), Value::Array(sections));
    Ok(Value::Object(m))
}

/// TSV rows of `table`: name, weight, h, canonical C, ǎ, ȟ, μ, dual, pairs.
pub fn table_tsv() -> Result<String> {
    use rayon::prelude::*;
    let records = table1();
    let results: Vec<Result<ClassificationResult>> = records
        .par_iter()
        .map(|rec| classify(&rec.weights))
        .collect();
    let mut out = String::new();
    for (rec, res) in records.iter().zip(results) {
        let r = res?;
        for g in group_classes(&r.solutions)? {
            let cm = g.canonical.as_matrix();
            let mut canonical = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    canonical.push(cm.get(i, j).to_string());
                }
            }
            let [a1, a2, a3] = rec.weights.a();
            out.push_str(&format!(
                "{}\t{},{},{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                rec.name,
                a1,
                a2,
                a3,
                rec.weights.h(),
                canonical.join(","),
                g.dual_weight_sorted
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                g.dual_degree,
                g.mu.map_or("-".into(), |m| m.to_string()),
                g.dual_name.unwrap_or("-"),
                g.members.len()
            ));
        }
    }
    Ok(out)
}
