use std::fmt::Write as _;
use std::time::Instant;

use dimers::analysis::{
    carlitz_cokernel, edge_probabilities, factorize, inverse_entry_sum, inverse_entry_sum_formula,
    kasteleyn_cokernel, kasteleyn_spectrum, moments_of_inertia, roundness, FactoredCount,
};
use dimers::families::HexagonSpec;
use dimers::kasteleyn::{brute_force_weighted, count_with, select_method, weighted_sum_with};
use dimers::weighted::hosts::{kenyon_host, urban_renewal_host};
use dimers::weighted::{
    gessel_check, kenyon_move, schur_specialization_check, urban_renewal, RectangleSpec,
};
use dimers::Method;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::source::{self, Instance, Params, Range};
use crate::table::Table;
use crate::verify::{self, Check};
use crate::{Format, MatrixKind, Report, Result};

fn factored(v: &BigInt) -> Result<Option<FactoredCount>> {
    if v.is_positive() {
        Ok(Some(factorize(v)?))
    } else {
        Ok(None)
    }
}

pub fn count(
    inst: &Instance,
    method: Option<Method>,
    with_factors: bool,
    weighted: bool,
    format: Format,
) -> Result<Report> {
    let method = method.unwrap_or_else(|| select_method(&inst.graph));
    let count = count_with(&inst.graph, method)?;
    let mut fields = vec![("count", count.to_string())];
    if with_factors {
        let f = factored(&count)?.map_or_else(|| "-".to_string(), |f| f.to_string());
        fields.push(("factored", f));
    }
    if weighted {
        fields.push((
            "weighted",
            weighted_sum_with(&inst.graph, method)?.to_string(),
        ));
    }
    let text = match format {
        Format::Text => {
            fields
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        }
        Format::Tsv => {
            let mut t = Table::new(&fields.iter().map(|f| f.0).collect::<Vec<_>>());
            t.push(fields.iter().map(|f| f.1.clone()).collect());
            t.render(format)
        }
    };
    Ok(Report::ok(text))
}

pub struct SweepArgs {
    pub family: String,
    pub range: Range,
    pub vary: String,
    pub params: Params,
    pub method: Option<Method>,
    pub jobs: usize,
    pub timing: bool,
}

/// One row of a sweep: a count with its factorization, or the error that
/// stopped it.
struct SweepRecord {
    value: u32,
    outcome: Result<(BigInt, Option<FactoredCount>)>,
    millis: u128,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?)
}

pub fn sweep(args: &SweepArgs, format: Format) -> Result<Report> {
    // Fail fast on a bad family or parameter name rather than once per row.
    source::check_names(&args.family, &args.params.with(&args.vary, 1))?;
    let run = |&value: &u32| {
        let start = Instant::now();
        let outcome = (|| {
            let inst = source::family(&args.family, &args.params.with(&args.vary, value))?;
            let method = args.method.unwrap_or_else(|| select_method(&inst.graph));
            let count = count_with(&inst.graph, method)?;
            let f = factored(&count)?;
            Ok((count, f))
        })();
        SweepRecord {
            value,
            outcome,
            millis: start.elapsed().as_millis(),
        }
    };
    let mut records: Vec<SweepRecord> =
        pool(args.jobs)?.install(|| args.range.0.par_iter().map(run).collect());
    records.sort_by_key(|r| r.value);

    let mut header = vec![
        args.vary.as_str(),
        "count",
        "factored",
        "largest_prime",
        "structure",
        "round",
    ];
    if args.timing {
        header.push("ms");
    }
    let mut table = Table::new(&header);
    let mut ok = true;
    for r in &records {
        let mut row = vec![r.value.to_string()];
        match &r.outcome {
            Ok((count, Some(f))) => {
                let report = roundness(f, u64::from(r.value.max(1)))?;
                row.push(count.to_string());
                row.push(f.to_string());
                row.push(report.largest_prime.to_string());
                row.push(f.structure.to_string());
                row.push(if report.outlier { "outlier" } else { "yes" }.to_string());
            }
            Ok((count, None)) => {
                row.push(count.to_string());
                row.extend(["-", "-", "-", "-"].map(String::from));
            }
            Err(e) => {
                ok = false;
                row.push(format!("error: {e}"));
                row.extend(["-", "-", "-", "-"].map(String::from));
            }
        }
        if args.timing {
            row.push(r.millis.to_string());
        }
        table.push(row);
    }
    Ok(Report {
        text: table.render(format),
        ok,
    })
}

pub fn verify(formula: &str, range: &Range, jobs: usize, format: Format) -> Result<Report> {
    if !verify::is_known(formula) {
        return Err(format!(
            "unknown formula `{formula}`; known: {}",
            verify::FORMULAS.join(", ")
        )
        .into());
    }
    let per_value: Vec<Vec<Check>> = pool(jobs)?.install(|| {
        range
            .0
            .par_iter()
            .map(|&n| verify::checks(formula, n))
            .collect()
    });
    let checks: Vec<Check> = per_value.into_iter().flatten().collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    let mut table = Table::new(&["formula", "instance", "got", "want", "status"]);
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        table.push(vec![
            formula.into(),
            c.label.clone(),
            c.got.clone(),
            c.want.clone(),
            status.into(),
        ]);
    }
    let mut text = table.render(format);
    if format == Format::Text {
        let _ = writeln!(text, "{formula}: {passed}/{} passed", checks.len());
    }
    Ok(Report {
        text,
        ok: passed == checks.len(),
    })
}

pub fn probs(inst: &Instance, format: Format) -> Result<Report> {
    let g = &inst.graph;
    let p = edge_probabilities(g)?;
    let mut table = Table::new(&["u", "v", "probability"]);
    for (e, prob) in g.edges().iter().zip(&p) {
        table.push(vec![
            g.label(e.u).to_string(),
            g.label(e.v).to_string(),
            prob.to_string(),
        ]);
    }
    Ok(Report::ok(table.render(format)))
}

pub fn moments(
    n: Option<u32>,
    params: Option<Params>,
    table: bool,
    digits: usize,
) -> Result<Report> {
    let spec = match (n, params) {
        (Some(n), _) => HexagonSpec::new(n, n, n)?,
        (None, Some(p)) => p.hexagon("hexagon")?,
        (None, None) => return Err("give an order or --params a=..,b=..,c=..".into()),
    };
    let report = moments_of_inertia(spec)?;
    let mut text = String::new();
    if table {
        text.push_str(&report.render_table(digits));
    }
    let _ = writeln!(
        text,
        "vertical={} horizontal={}",
        report.vertical, report.horizontal
    );
    Ok(Report::ok(text))
}

pub fn cokernel(inst: &Instance, matrix: Option<MatrixKind>) -> Result<Report> {
    let kind = matrix.unwrap_or(if inst.hexagon.is_some() {
        MatrixKind::Carlitz
    } else {
        MatrixKind::Kasteleyn
    });
    let snf = match (kind, inst.hexagon) {
        (MatrixKind::Carlitz, Some(spec)) => carlitz_cokernel(spec),
        (MatrixKind::Carlitz, None) => {
            return Err("the lattice-path matrix needs --family hexagon".into())
        }
        (MatrixKind::Kasteleyn, _) => kasteleyn_cokernel(&inst.graph)?,
    };
    Ok(Report::ok(format!("{}\n", snf.cokernel())))
}

pub fn spectrum(inst: &Instance, format: Format) -> Result<Report> {
    let poly = kasteleyn_spectrum(&inst.graph)?;
    let text = match format {
        Format::Text => format!("{poly}\n"),
        Format::Tsv => {
            let mut t = Table::new(&["degree", "coefficient"]);
            for (k, c) in poly.coeffs().iter().enumerate() {
                t.push(vec![k.to_string(), c.to_string()]);
            }
            t.render(format)
        }
    };
    Ok(Report::ok(text))
}

pub fn invsum(range: &Range, format: Format) -> Result<Report> {
    let mut table = Table::new(&["n", "sum", "formula", "status"]);
    let mut ok = true;
    for &n in &range.0 {
        let sum = inverse_entry_sum(n)?;
        let formula = inverse_entry_sum_formula(n);
        let pass = sum == formula;
        ok &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        table.push(vec![
            n.to_string(),
            sum.to_string(),
            formula.to_string(),
            status.into(),
        ]);
    }
    Ok(Report {
        text: table.render(format),
        ok,
    })
}

pub fn gessel(m: u32, n: u32, schur: bool, show: bool) -> Result<Report> {
    let spec = RectangleSpec::new(m, n)?;
    let cmp = if schur {
        schur_specialization_check(spec)?
    } else {
        gessel_check(spec)?
    };
    let mut text = String::new();
    if show {
        let _ = writeln!(text, "left={}", cmp.left);
        let _ = writeln!(text, "right={}", cmp.right);
        if !cmp.is_equal() {
            let _ = writeln!(text, "difference={}", cmp.difference);
        }
    }
    let _ = writeln!(text, "{}", cmp.verdict());
    Ok(Report {
        text,
        ok: cmp.is_equal(),
    })
}

pub fn rewrite_check(hosts: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exact = 0;
    for _ in 0..hosts {
        let (g, site) = urban_renewal_host(&mut rng);
        let rw = urban_renewal(&g, site)?;
        if brute_force_weighted(&g)? == &rw.factor * brute_force_weighted(&rw.graph)? {
            exact += 1;
        }
    }
    let mut factors: Vec<BigRational> = Vec::new();
    let mut checks = 0;
    for _ in 0..hosts {
        let (g, site) = kenyon_host(&mut rng);
        for site in [site, site.mirrored()] {
            let rw = kenyon_move(&g, site)?;
            let after = brute_force_weighted(&rw.graph)?;
            checks += 1;
            if !after.is_zero() {
                let f = brute_force_weighted(&g)? / after;
                if !factors.contains(&f) {
                    factors.push(f);
                }
            }
        }
    }
    let mut text = format!("urban-renewal hosts={hosts} exact={exact}\n");
    let constant = factors.len() <= 1;
    let shown: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    let _ = writeln!(
        text,
        "kenyon checks={checks} factor={} {}",
        shown.join(","),
        if constant { "constant" } else { "varies" }
    );
    Ok(Report {
        text,
        ok: exact == hosts && constant,
    })
}

pub fn factor(values: &[BigInt], format: Format) -> Result<Report> {
    let mut table = Table::new(&["value", "factored", "structure"]);
    let mut text = String::new();
    for v in values {
        let f = factorize(v)?;
        let _ = writeln!(text, "{v} = {f}  [{}]", f.structure);
        table.push(vec![v.to_string(), f.to_string(), f.structure.to_string()]);
    }
    Ok(Report::ok(if format == Format::Tsv {
        table.render(format)
    } else {
        text
    }))
}
