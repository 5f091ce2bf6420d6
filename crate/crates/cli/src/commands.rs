//! Subcommand implementations. Each returns the full output text.

use std::env;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use orbiquint::classify::{
    c1_models_json, c2_models_json, classify, enumerate_c1_models, enumerate_c2_models, table1, table1_markdown,
    table1_tsv, table2_markdown, table2_rows, table2_tsv, table3_markdown, table3_rows, table3_tsv, theorem_divisors,
    theorem_entries, theorem_json, worked_example_pieces, DivisorRecord, GraphFamily, LocalModelEntry,
};
use orbiquint::covergraphs::enumerate_boundary_types;
use orbiquint::golden::{self, GoldenReport};
use orbiquint::orbiscroll::coarse_singularities;
use orbiquint::parity::{section_parity, SectionClass};
use orbiquint::recillas::{fix_counts, recillas_character_check, tetragonal_to_trigonal, Perm};
use orbiquint::resolve::{
    delta_invariant, diagrams, genus_rh, geometric_genus, hj_expand, pa_hirzebruch, AkSing, Chain, Cqs, Diagram,
};
use orbiquint::Frac;
use serde_json::{json, Value};

use crate::args::{ModelsArg, OutputFormat, TypeArg};
use crate::error::CliError;

use OutputFormat::{Dot, Json, Md, Tsv};

/// Environment variable naming the golden directory.
pub const GOLDEN_ENV: &str = "ORBIQUINT_GOLDEN";

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn unsupported(what: &str, format: OutputFormat) -> CliError {
    CliError::usage(
        "unsupported_format",
        format!("{} does not support --format {}", what, format),
    )
}

fn parse_frac(text: &str) -> Result<Frac, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::usage("bad_fraction", format!("cannot parse {:?} as p/q", text)))
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

pub fn table1_cmd(format: OutputFormat) -> Result<String, CliError> {
    let rows = table1();
    Ok(match format {
        Md => table1_markdown(&rows),
        Tsv => table1_tsv(&rows),
        Json => pretty(&to_value(&rows)),
        Dot => return Err(unsupported("table1", format)),
    })
}

pub fn boundary_graphs(d: u32, format: OutputFormat) -> Result<String, CliError> {
    let types = enumerate_boundary_types(d);
    let index = |t: Option<u8>| t.map_or("-".to_string(), |t| t.to_string());
    Ok(match format {
        Md => {
            let rows: Vec<Vec<String>> = types
                .iter()
                .map(|t| {
                    let degs: Vec<String> = t.main_degrees.iter().map(|x| x.to_string()).collect();
                    vec![
                        index(t.type_index),
                        t.shape.to_string(),
                        degs.join(","),
                        if t.ranges.is_empty() {
                            "-".into()
                        } else {
                            t.range_text()
                        },
                        t.instances.len().to_string(),
                        t.canonical_count().to_string(),
                    ]
                })
                .collect();
            md_table(
                &["type", "shape", "main degrees", "range", "instances", "canonical"],
                &rows,
            )
        }
        Json => {
            let families: Vec<Value> = types
                .iter()
                .map(|t| {
                    let members: Vec<Value> = t
                        .instances
                        .iter()
                        .map(|x| json!({"params": x.params, "canonical": x.canonical, "graph": x.graph.to_json()}))
                        .collect();
                    json!({
                        "type": t.type_index,
                        "shape": t.shape.to_string(),
                        "main_degrees": t.main_degrees,
                        "ranges": t.ranges,
                        "range": t.range_text(),
                        "instances": t.instances.len(),
                        "canonical": t.canonical_count(),
                        "members": members,
                    })
                })
                .collect();
            pretty(&json!({"d": d, "families": families}))
        }
        Dot => {
            let mut out = String::new();
            for t in &types {
                for x in t.instances.iter().filter(|x| x.canonical) {
                    let params: Vec<String> = x.params.iter().map(|p| p.to_string()).collect();
                    let name = format!("type{}_{}_{}", index(t.type_index), t.shape, params.join("_"));
                    out.push_str(&x.graph.to_dot(name.trim_end_matches('_')));
                }
            }
            out
        }
        Tsv => return Err(unsupported("boundary-graphs", format)),
    })
}

pub fn resolve_cmd(r: i64, q: i64, format: OutputFormat) -> Result<String, CliError> {
    let chain = hj_expand(r, q)?;
    Ok(match format {
        Md => format!("{}\n", chain),
        Json => pretty(&json!({"r": r, "q": q, "chain": chain.ints})),
        _ => return Err(unsupported("resolve", format)),
    })
}

pub fn coarse_cmd(r: i64, a: &str, format: OutputFormat) -> Result<String, CliError> {
    let a = parse_frac(a)?;
    let cs = coarse_singularities(r, &a)?;
    let chain = |c: &Cqs| if c.is_smooth() { Chain::default() } else { c.chain() };
    Ok(match format {
        Md => format!(
            "sigma(0): {} chain {}\ntau(0): {} chain {}\nfiber multiplicity: {}\n",
            cs.at_sigma,
            chain(&cs.at_sigma),
            cs.at_tau,
            chain(&cs.at_tau),
            cs.fiber_multiplicity
        ),
        Json => pretty(&json!({
            "r": r,
            "a": a.to_string(),
            "at_sigma": {"singularity": cs.at_sigma.to_string(), "chain": chain(&cs.at_sigma).ints},
            "at_tau": {"singularity": cs.at_tau.to_string(), "chain": chain(&cs.at_tau).ints},
            "fiber_multiplicity": cs.fiber_multiplicity,
        })),
        _ => return Err(unsupported("coarse", format)),
    })
}

pub fn diagrams_cmd(item: Option<u32>, format: OutputFormat) -> Result<String, CliError> {
    let list: Vec<Diagram> = match item {
        Some(k) => diagrams().into_iter().filter(|d| d.item == k).collect(),
        None => diagrams(),
    };
    let mut out = String::new();
    match format {
        Md => {
            for (k, d) in list.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                out.push_str(&d.render()?);
            }
        }
        Json => {
            let mut vals = Vec::new();
            for d in &list {
                vals.push(json!({
                    "item": d.item,
                    "n": d.n,
                    "m": d.m.to_string(),
                    "a": d.a.to_string(),
                    "r": d.r,
                    "spec": d.spec.to_string(),
                    "left": to_value(&d.left()?),
                    "right": to_value(&d.right()?),
                }));
            }
            out = pretty(&Value::Array(vals));
        }
        Dot => {
            for d in &list {
                out.push_str(&d.left()?.to_dot(&format!("item{:02}_left", d.item)));
                out.push_str(&d.right()?.to_dot(&format!("item{:02}_right", d.item)));
            }
        }
        Tsv => return Err(unsupported("diagrams", format)),
    }
    Ok(out)
}

pub fn recillas_cmd(mon: &[String], format: OutputFormat) -> Result<String, CliError> {
    let perms: Vec<Perm> = if mon.is_empty() {
        Perm::all(4)
    } else {
        mon.iter().map(|s| Perm::parse(4, s)).collect::<Result<_, _>>()?
    };
    let corr = (!mon.is_empty()).then(|| tetragonal_to_trigonal(&perms));
    let strs = |ps: &[Perm]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    Ok(match format {
        Md => {
            let rows: Vec<Vec<String>> = perms
                .iter()
                .map(|p| {
                    let c = fix_counts(p);
                    vec![
                        p.to_string(),
                        p.cycle_type().to_string(),
                        c.fix4.to_string(),
                        c.fix3.to_string(),
                        c.fix6.to_string(),
                        recillas_character_check(p).to_string(),
                    ]
                })
                .collect();
            let mut out = md_table(
                &["perm", "cycle type", "fix4", "fix3", "fix6", "1+fix6=fix3+fix4"],
                &rows,
            );
            if let Some(c) = &corr {
                let _ = writeln!(out, "\ntrigonal: {}", strs(&c.trigonal).join(", "));
                let _ = writeln!(out, "double: {}", strs(&c.double).join(", "));
            }
            out
        }
        Json => {
            let elements: Vec<Value> = perms
                .iter()
                .map(|p| {
                    let c = fix_counts(p);
                    json!({
                        "perm": p.to_string(),
                        "cycle_type": p.cycle_type().to_string(),
                        "fix4": c.fix4,
                        "fix3": c.fix3,
                        "fix6": c.fix6,
                        "identity_holds": recillas_character_check(p),
                    })
                })
                .collect();
            let mut v = json!({"elements": elements});
            if let Some(c) = &corr {
                v["correspondence"] = json!({"trigonal": strs(&c.trigonal), "double": strs(&c.double)});
            }
            pretty(&v)
        }
        _ => return Err(unsupported("recillas", format)),
    })
}

pub fn parity_cmd(pieces: Option<&str>, worked: Option<u32>, format: OutputFormat) -> Result<String, CliError> {
    let pieces: Vec<Frac> = match (pieces, worked) {
        (Some(text), None) => text.split(',').map(parse_frac).collect::<Result<_, _>>()?,
        (None, Some(p)) => worked_example_pieces(p)?,
        _ => {
            return Err(CliError::usage(
                "missing_argument",
                "parity needs --pieces or --worked-example",
            ))
        }
    };
    let sc = SectionClass::new(pieces)?;
    let parity = section_parity(&sc)?;
    let texts: Vec<String> = sc.pieces.iter().map(|x| x.to_string()).collect();
    Ok(match format {
        Md => format!(
            "pieces: {}\nsum: {}\nparity: {}\ndegeneration: {:?}\n",
            texts.join(","),
            sc.total(),
            parity,
            parity.degeneration()
        ),
        Json => pretty(&json!({
            "pieces": texts,
            "sum": sc.total().to_string(),
            "parity": parity.to_string(),
            "degeneration": format!("{:?}", parity.degeneration()),
        })),
        _ => return Err(unsupported("parity", format)),
    })
}

fn records_md(recs: &[DivisorRecord]) -> String {
    let rows: Vec<Vec<String>> = recs
        .iter()
        .map(|r| {
            let mut src: Vec<String> = r
                .sources
                .iter()
                .map(|s| format!("{} ({})", s.divisor, s.detail))
                .collect();
            src.dedup();
            vec![
                r.label.clone(),
                r.theorem_index.map_or("-".into(), |i| i.to_string()),
                r.desc.to_string(),
                src.join("; "),
            ]
        })
        .collect();
    md_table(&["label", "item", "curve", "sources"], &rows)
}

fn models_md(entries: &[LocalModelEntry]) -> Vec<Vec<String>> {
    let opt = |x: &Option<Frac>| x.as_ref().map_or("-".to_string(), |f| f.to_string());
    entries
        .iter()
        .map(|e| {
            vec![
                e.label.clone(),
                e.param.to_string(),
                e.p.map_or("-".into(), |p| p.to_string()),
                format!("{:?}", e.genera),
                opt(&e.sigma_a2),
                opt(&e.sigma_b2),
                e.description.clone(),
            ]
        })
        .collect()
}

fn models_cmd(which: ModelsArg, format: OutputFormat) -> Result<String, CliError> {
    match format {
        Json => Ok(match which {
            ModelsArg::C1 => c1_models_json()?,
            ModelsArg::C2 => c2_models_json()?,
        }),
        Md => {
            let mut entries = Vec::new();
            match which {
                ModelsArg::C1 => (1..=4).try_for_each(|i| enumerate_c1_models(i).map(|e| entries.extend(e)))?,
                ModelsArg::C2 => (1..=9).try_for_each(|j| enumerate_c2_models(j).map(|e| entries.extend(e)))?,
            }
            let rows = models_md(&entries);
            Ok(md_table(
                &["label", "param", "p", "genera", "σ_A²", "σ_B²", "description"],
                &rows,
            ))
        }
        _ => Err(unsupported("classify --models", format)),
    }
}

fn table_cmd(which: u8, format: OutputFormat) -> Result<String, CliError> {
    Ok(match (which, format) {
        (1, _) => return table1_cmd(format),
        (2, Md) => table2_markdown(&table2_rows()),
        (2, Tsv) => table2_tsv(&table2_rows()),
        (2, Json) => pretty(&to_value(&table2_rows())),
        (3, Md) => table3_markdown(&table3_rows()),
        (3, Tsv) => table3_tsv(&table3_rows()),
        (3, Json) => pretty(&to_value(&table3_rows())),
        _ => return Err(unsupported("classify --table", format)),
    })
}

pub fn classify_cmd(
    kind: TypeArg,
    models: Option<ModelsArg>,
    table: Option<u8>,
    format: OutputFormat,
) -> Result<String, CliError> {
    if let Some(m) = models {
        return models_cmd(m, format);
    }
    if let Some(t) = table {
        return table_cmd(t, format);
    }
    let family = match kind {
        TypeArg::OneToFive => GraphFamily::OneToFive,
        TypeArg::Six => GraphFamily::Six,
        TypeArg::Seven => GraphFamily::Seven,
        TypeArg::Eight => GraphFamily::Eight,
        TypeArg::All => {
            let recs = theorem_divisors()?;
            return match format {
                Md => Ok(records_md(&recs)),
                Json => Ok(theorem_json(&recs)),
                _ => Err(unsupported("classify --type all", format)),
            };
        }
    };
    let recs = classify(family)?;
    match format {
        Md => Ok(records_md(&recs)),
        Json => {
            let vals: Vec<Value> = recs
                .iter()
                .zip(theorem_entries(&recs))
                .map(|(r, e)| {
                    json!({
                        "label": r.label,
                        "index": e.index,
                        "curve": e.curve,
                        "genera": e.genera,
                        "edges": e.edges,
                        "sources": to_value(&r.sources),
                        "annotations": r.annotations,
                    })
                })
                .collect();
            Ok(pretty(&Value::Array(vals)))
        }
        _ => Err(unsupported("classify --type", format)),
    }
}

pub fn genus_cmd(
    hirzebruch: Option<&[i64]>,
    sing: &[i64],
    rh: Option<&[i64]>,
    format: OutputFormat,
) -> Result<String, CliError> {
    let triple = |v: Option<&[i64]>, flag: &str| match v {
        Some(x) if x.len() != 3 => Err(CliError::usage(
            "bad_argument",
            format!("--{} takes three comma-separated integers", flag),
        )),
        _ => Ok(()),
    };
    triple(hirzebruch, "hirzebruch")?;
    triple(rh, "rh")?;
    let value = match (hirzebruch, rh) {
        (Some(&[l, n, m]), None) => {
            let sings: Vec<AkSing> = sing.iter().map(|&k| AkSing::new(k)).collect::<Result<_, _>>()?;
            let pa = pa_hirzebruch(l, n, m);
            let delta: u64 = sings.iter().map(|&s| delta_invariant(s)).sum();
            let names: Vec<String> = sings.iter().map(|s| s.to_string()).collect();
            json!({
                "route": "hirzebruch",
                "class": {"l": l, "n": n, "m": m},
                "singularities": names,
                "arithmetic_genus": pa,
                "delta": delta,
                "genus": geometric_genus(pa, &sings)?,
            })
        }
        (None, Some(&[deg, base, ram])) => {
            if !sing.is_empty() {
                return Err(CliError::usage("bad_argument", "--sing applies only with --hirzebruch"));
            }
            json!({
                "route": "riemann-hurwitz",
                "degree": deg,
                "base_genus": base,
                "ramification": ram,
                "genus": genus_rh(deg, base, ram)?,
            })
        }
        _ => {
            return Err(CliError::usage(
                "missing_argument",
                "genus needs --hirzebruch l,n,m or --rh d,g,b",
            ))
        }
    };
    Ok(match format {
        Md => {
            let mut out = String::new();
            for (k, v) in value.as_object().expect("object") {
                let text = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{}: {}", k, text);
            }
            out
        }
        Json => pretty(&value),
        _ => return Err(unsupported("genus", format)),
    })
}

/// The golden directory: the flag, then the environment, then `./golden`,
/// then the copy in the source tree.
pub fn golden_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    if let Some(p) = env::var_os(GOLDEN_ENV) {
        return PathBuf::from(p);
    }
    let local = PathBuf::from("golden");
    if local.is_dir() {
        return local;
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

/// The rendered report and whether it is clean.
pub fn verify_golden_cmd(dir: Option<&Path>, format: OutputFormat) -> Result<(String, bool), CliError> {
    let dir = golden_dir(dir);
    if !dir.is_dir() {
        return Err(CliError::domain(
            "missing_golden_dir",
            format!("golden directory {} not found", dir.display()),
        ));
    }
    let report: GoldenReport = golden::verify(&dir)?;
    let text = match format {
        Md => {
            let mut out = String::new();
            for line in report.lines() {
                let _ = writeln!(out, "{}", line);
            }
            let _ = writeln!(
                out,
                "{} checked, {} missing, {} mismatches",
                report.checked.len(),
                report.missing.len(),
                report.mismatches.len()
            );
            out
        }
        Json => pretty(&to_value(&report)),
        _ => return Err(unsupported("verify-golden", format)),
    };
    Ok((text, report.is_clean()))
}
