use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use serde_json::{json, Value};

use semiring_core::catalog::{
    catalog_read, catalog_to_string, catalog_write, CatalogEntry, Provenance, FLAG_NAMES,
};
use semiring_core::classify::{classify, verify_structure_theorems};
use semiring_core::congruence::is_congruence_simple;
use semiring_core::constructions::{
    builtin, finite_field, flat_howie, matrix_semiring, small_groups, v_of_group, valid_pmatrices,
    zero_ring, GroupTable, PMatrix, BUILTIN_NAMES,
};
use semiring_core::enumerate::{enumerate_semirings_with_progress, EnumerationJob};
use semiring_core::iso::are_isomorphic;
use semiring_core::semiring::{validate, SemiringFile};
use semiring_core::{Error, FiniteSemiring};

use crate::{Cli, Command, Family, Format};

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 2,
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 1,
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::domain(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> CliResult<FiniteSemiring> {
    FiniteSemiring::from_json(&read_input(path)?)
        .map_err(|e| CliError::domain(format!("{path}: {e}")))
}

fn emit_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string(value).expect("json value serializes")
    );
}

fn required<T: Clone>(value: &Option<T>, flag: &str, family: &str) -> CliResult<T> {
    value
        .clone()
        .ok_or_else(|| CliError::usage(format!("--family {family} requires {flag}")))
}

pub fn run(cli: &Cli) -> CliResult<ExitCode> {
    let format = cli.format;
    match &cli.command {
        Command::Check { file } => check(file, format),
        Command::Construct {
            family,
            group,
            q,
            n,
            m,
            pmatrix,
            name,
        } => {
            let s = match family {
                Family::Vg => {
                    let g = GroupTable::by_name(&required(group, "--group", "vg")?)?;
                    v_of_group(&g)?
                }
                Family::Matq => {
                    let q = required(q, "--q", "matq")?;
                    let n = required(n, "--n", "matq")?;
                    matrix_semiring(&finite_field(q)?, n)?
                }
                Family::ZeroRing => zero_ring(required(m, "--m", "zero-ring")?)?,
                Family::Howie => {
                    let path = required(pmatrix, "--pmatrix", "howie")?;
                    flat_howie(&PMatrix::from_json(&read_input(&path)?)?)?
                }
                Family::Table => builtin(&required(name, "--name", "table")?)?,
            };
            match format {
                Format::Json => println!("{}", s.to_json()),
                Format::Text => print!("{}", s.render_tables()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file } => {
            let s = load(file)?;
            let r = classify(&s)?;
            match format {
                Format::Json => emit_json(&serde_json::to_value(&r).expect("serializes")),
                Format::Text => {
                    println!("{}", r.case);
                    for (k, v) in &r.properties_tested {
                        println!("  {k}: {v}");
                    }
                    if let Some(e) = &r.evidence {
                        println!(
                            "  evidence: {}",
                            serde_json::to_string(e).expect("serializes")
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            order,
            csimple_only,
            commutative_only,
            out,
            node_budget,
            time_budget,
        } => {
            let mut job = EnumerationJob::new(*order)
                .csimple_only(*csimple_only)
                .commutative_only(*commutative_only);
            job.node_budget = *node_budget;
            job.time_budget = time_budget.map(Duration::from_secs);
            let found = enumerate_semirings_with_progress(&job, &|done, total| {
                eprintln!("addition tables: {done}/{total}");
            })?;
            let entries = found
                .iter()
                .map(|s| CatalogEntry::from_semiring(s, Provenance::Enumerated))
                .collect::<Result<Vec<_>, _>>()?;
            let simple = entries.iter().filter(|e| e.simple).count();
            eprintln!("{} classes, {simple} congruence-simple", entries.len());
            match out {
                Some(path) => {
                    catalog_write(Path::new(path), &entries)?;
                    match format {
                        Format::Json => emit_json(&json!({
                            "order": order,
                            "count": entries.len(),
                            "simple": simple,
                            "out": path,
                        })),
                        Format::Text => println!("wrote {} entries to {path}", entries.len()),
                    }
                }
                None => match format {
                    Format::Json => print!("{}", catalog_to_string(&entries)?),
                    Format::Text => {
                        for e in &entries {
                            print_entry_text(e);
                        }
                    }
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { file1, file2 } => {
            let (a, b) = (load(file1)?, load(file2)?);
            let phi = are_isomorphic(&a, &b);
            match format {
                Format::Json => emit_json(&json!({
                    "isomorphic": phi.is_some(),
                    "permutation": phi,
                })),
                Format::Text => match &phi {
                    Some(p) => println!("isomorphic: {p:?}"),
                    None => println!("not isomorphic"),
                },
            }
            Ok(if phi.is_some() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyTheorems { files, max_order } => verify(files, *max_order, format),
        Command::Catalog {
            path,
            order,
            flags,
            case,
        } => {
            let mut wanted = Vec::new();
            for f in flags {
                let (name, value) = match f.strip_prefix('!') {
                    Some(rest) => (rest, false),
                    None => (f.as_str(), true),
                };
                if !FLAG_NAMES.contains(&name) {
                    return Err(CliError::usage(format!(
                        "unknown flag '{name}' (known: {})",
                        FLAG_NAMES.join(", ")
                    )));
                }
                wanted.push((name, value));
            }
            let entries: Vec<CatalogEntry> = catalog_read(Path::new(path))?
                .into_iter()
                .filter(|e| order.is_none_or(|o| e.order == o))
                .filter(|e| wanted.iter().all(|(name, v)| e.flag(name) == Some(*v)))
                .filter(|e| {
                    case.as_ref().is_none_or(|c| {
                        e.classification
                            .as_ref()
                            .is_some_and(|cl| cl.case.eq_ignore_ascii_case(c))
                    })
                })
                .collect();
            match format {
                Format::Json => print!("{}", catalog_to_string(&entries)?),
                Format::Text => {
                    for e in &entries {
                        print_entry_text(e);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_entry_text(e: &CatalogEntry) {
    let case = e
        .classification
        .as_ref()
        .map(|c| c.case.as_str())
        .unwrap_or("-");
    println!(
        "order {}  simple {}  case {}  {}",
        e.order, e.simple, case, e.canonical_form
    );
}

fn check(file: &str, format: Format) -> CliResult<ExitCode> {
    let text = read_input(file)?;
    let parsed =
        SemiringFile::from_json(&text).map_err(|e| CliError::domain(format!("{file}: {e}")))?;
    let (add, mul) = parsed
        .tables()
        .map_err(|e| CliError::domain(format!("{file}: {e}")))?;
    let report = validate(&add, &mul)?;
    if !report.valid {
        match format {
            Format::Json => emit_json(&json!({ "valid": false, "violations": report.violations })),
            Format::Text => {
                println!("not a semiring");
                for v in &report.violations {
                    println!("  {} fails at {:?}", v.axiom, v.witness);
                }
            }
        }
        return Ok(ExitCode::from(1));
    }
    let s = FiniteSemiring::try_from(parsed)?;
    let special = s.special_elements();
    let props = s.properties();
    let simplicity = is_congruence_simple(&s);
    match format {
        Format::Json => emit_json(&json!({
            "valid": true,
            "order": s.order(),
            "special_elements": special,
            "properties": props,
            "congruence_simple": simplicity,
        })),
        Format::Text => {
            let labels = s.labels();
            println!("valid semiring of order {}", s.order());
            println!();
            println!("{}", s.render_tables());
            let name = |x: Option<usize>| x.map_or("none".to_string(), |i| labels[i].clone());
            println!(
                "additive identity:           {}",
                name(special.additive_identity)
            );
            println!("zero:                        {}", name(special.zero));
            println!(
                "additively absorbing:        {}",
                name(special.additively_absorbing)
            );
            println!(
                "multiplicatively absorbing:  {}",
                name(special.multiplicatively_absorbing)
            );
            println!(
                "multiplicative identity:     {}",
                name(special.multiplicative_identity)
            );
            println!("infinity:                    {}", name(special.infinity));
            println!(
                "additively idempotent:       {}",
                props.additively_idempotent
            );
            println!("zero-sum free:               {:?}", props.zero_sum_free);
            println!("zero multiplication:         {}", props.zero_multiplication);
            println!("ring:                        {}", props.is_ring);
            println!("trivial addition:            {}", props.trivial_addition);
            match &simplicity.witness {
                None => println!("congruence-simple:           yes"),
                Some(w) => {
                    let blocks: Vec<String> = w
                        .partition
                        .blocks()
                        .iter()
                        .map(|b| {
                            let names: Vec<&str> = b.iter().map(|&x| labels[x].as_str()).collect();
                            format!("{{{}}}", names.join(", "))
                        })
                        .collect();
                    println!(
                        "congruence-simple:           no; ({}, {}) generates {}",
                        labels[w.pair.0],
                        labels[w.pair.1],
                        blocks.join(" ")
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Enumerated congruence-simple semirings up to `max_order` plus every
/// constructed family at desk scale.
fn corpus(max_order: usize) -> CliResult<Vec<(String, FiniteSemiring)>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let job = EnumerationJob::new(n).csimple_only(true);
        for (i, s) in enumerate_semirings_with_progress(&job, &|_, _| {})?
            .into_iter()
            .enumerate()
        {
            out.push((format!("enumerated/{n}/{i}"), s));
        }
    }
    for name in BUILTIN_NAMES {
        out.push((format!("table/{name}"), builtin(name)?));
    }
    for n in 1..=8 {
        for g in small_groups(n)? {
            out.push((format!("vg/{}", g.name()), v_of_group(&g)?));
        }
    }
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        out.push((format!("field/{q}"), finite_field(q)?));
    }
    out.push(("matq/2/2".into(), matrix_semiring(&finite_field(2)?, 2)?));
    for p in [2, 3, 5, 7, 11, 13] {
        out.push((format!("zero-ring/{p}"), zero_ring(p)?));
    }
    for (i, p) in valid_pmatrices(3, 3).iter().enumerate() {
        out.push((
            format!("howie/{}x{}/{i}", p.rows(), p.cols()),
            flat_howie(p)?,
        ));
    }
    Ok(out)
}

fn verify(files: &[String], max_order: usize, format: Format) -> CliResult<ExitCode> {
    let items = if files.is_empty() {
        corpus(max_order)?
    } else {
        files
            .iter()
            .map(|f| Ok((f.clone(), load(f)?)))
            .collect::<CliResult<Vec<_>>>()?
    };
    let mut results = Vec::new();
    let mut failures = 0usize;
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for (name, s) in &items {
        let report = verify_structure_theorems(s)?;
        let case = match classify(s) {
            Ok(r) => r.case.label().to_string(),
            Err(e @ Error::TheoremViolation { .. }) => {
                failures += 1;
                results.push(json!({ "name": name, "error": e.to_string() }));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if !report.all_passed {
            failures += 1;
        }
        *cases.entry(case.clone()).or_default() += 1;
        results.push(json!({
            "name": name,
            "order": s.order(),
            "case": case,
            "all_passed": report.all_passed,
            "checks": report.checks,
        }));
    }
    match format {
        Format::Json => emit_json(&json!({
            "checked": items.len(),
            "failures": failures,
            "cases": cases,
            "results": results,
        })),
        Format::Text => {
            for r in &results {
                let status = if r["all_passed"] == Value::Bool(true) {
                    "ok  "
                } else {
                    "FAIL"
                };
                println!(
                    "{status} {} {}",
                    r["name"].as_str().unwrap_or("?"),
                    r["case"].as_str().unwrap_or("")
                );
            }
            println!("{} semirings checked, {failures} failures", items.len());
        }
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
