use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use coverdepth_core::depth::{
    delta_max_dp, dstab_closed, dstab_scan, feasible, limit_depth, s_of_exponents, witness_blocks,
};
use coverdepth_core::monomial::{cover_ideal_edges, cover_ideal_path};
use coverdepth_core::verify::{self, Fault, VerifyConfig};
use coverdepth_core::{
    BlockLayout, DepthQuery, DepthReport, EdgeSubset, Error, FeasibilityWitness, MonomialIdeal,
    Result,
};

use crate::args::{AssradVariant, Cli, Command, Format, GlobalOpts, MethodArg};
use crate::render::Table;
use crate::Status;

/// Box limit for the assrad enumeration in the demo.
const ASSRAD_BOX: u128 = 1 << 24;

pub fn run(cli: Cli) -> Result<Status> {
    let g = &cli.global;
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = g.jobs {
            b = b.num_threads(usize::from(j));
        }
        b.build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
    };
    pool.install(|| match cli.command {
        Command::Depth { n, t, method } => depth(g, n, t, method),
        Command::Table {
            n_range,
            t_range,
            method,
        } => table(g, n_range, t_range, method),
        Command::Verify {
            n_range,
            t_range,
            dstab_n_max,
            samples,
            seed,
            inject_fault,
        } => {
            let cfg = VerifyConfig {
                n_range,
                t_range,
                dstab_n_max,
                hochster_samples: samples,
                seed,
                budget: g.budget(),
                fault: inject_fault.then_some(Fault::NegatedClosed),
                ..VerifyConfig::default()
            };
            verify_cmd(g, &cfg)
        }
        Command::Witness { n, t } => witness(g, n, t),
        Command::Dstab { n, n_range } => {
            let range = n_range.unwrap_or_else(|| {
                let n = n.expect("clap requires n or n-range");
                n..=n
            });
            dstab(g, range)
        }
        Command::AssradDemo { variant } => assrad_demo(g, variant),
    })
}

fn depth(g: &GlobalOpts, n: usize, t: u32, method: MethodArg) -> Result<Status> {
    let q = DepthQuery::new(n, t)?;
    let report = DepthReport::compute(q, &method.methods(), &g.budget())?;
    match g.format.unwrap_or(Format::Json) {
        Format::Json => println!("{}", report.to_json()),
        f => {
            let mut tab = Table::new(vec!["n", "t", "method", "depth"]);
            for (m, d) in &report.depth_by_method {
                tab.push(vec![n.to_string(), t.to_string(), m.to_string(), d.to_string()]);
            }
            print!("{}", tab.render(f));
        }
    }
    Ok(agreement(&report))
}

fn agreement(report: &DepthReport) -> Status {
    if report.agreed_depth().is_some() {
        return Status::Ok;
    }
    let q = report.query;
    let shown: Vec<String> = report
        .depth_by_method
        .iter()
        .map(|(m, d)| format!("{m}={d}"))
        .collect();
    eprintln!(
        "mismatch at n={} t={}: {} (dp delta {})",
        q.n,
        q.t,
        shown.join(" "),
        report.delta
    );
    Status::Mismatch
}

fn table(
    g: &GlobalOpts,
    n_range: RangeInclusive<usize>,
    t_range: RangeInclusive<u32>,
    method: MethodArg,
) -> Result<Status> {
    let methods = method.methods();
    let budget = g.budget();
    let cells: Vec<(usize, u32)> = n_range
        .flat_map(|n| t_range.clone().map(move |t| (n, t)))
        .collect();
    let reports = cells
        .par_iter()
        .map(|&(n, t)| DepthReport::compute(DepthQuery::new(n, t)?, &methods, &budget))
        .collect::<Result<Vec<_>>>()?;

    let mut status = Status::Ok;
    let mut tab = Table::new(vec!["n", "t", "depth", "delta", "dstab", "limit"]);
    for r in &reports {
        if agreement(r) != Status::Ok {
            status = Status::Mismatch;
        }
        let q = r.query;
        let depth = r.depth_by_method.values().next().copied().unwrap_or(q.n - 1 - r.delta);
        tab.push(vec![
            q.n.to_string(),
            q.t.to_string(),
            depth.to_string(),
            r.delta.to_string(),
            dstab_closed(q.n)?.to_string(),
            limit_depth(q.n)?.to_string(),
        ]);
    }
    print!("{}", tab.render(g.format.unwrap_or(Format::Csv)));
    Ok(status)
}

fn verify_cmd(g: &GlobalOpts, cfg: &VerifyConfig) -> Result<Status> {
    let report = verify::run(cfg);
    if g.format == Some(Format::Json) {
        let checks: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "check": c.name,
                    "passed": c.passed(),
                    "cases": c.cases,
                    "skipped": c.skipped,
                    "failures": c.failures.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        let out = serde_json::json!({ "passed": report.passed(), "checks": checks });
        println!("{out}");
    } else {
        for c in &report.checks {
            println!(
                "{} {}: {} cases, {} skipped, {} failures",
                if c.passed() { "PASS" } else { "FAIL" },
                c.name,
                c.cases,
                c.skipped,
                c.failures.len()
            );
            for f in &c.failures {
                println!("  {f}");
            }
        }
    }
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::Mismatch
    })
}

fn witness(g: &GlobalOpts, n: usize, t: u32) -> Result<Status> {
    let q = DepthQuery::new(n, t)?;
    let layout = BlockLayout::new(q.n, q.t)?;
    let blocks = witness_blocks(q.n, q.t)?;
    let (delta, dp) = delta_max_dp(q.n, q.t)?;

    let realized = |w: &FeasibilityWitness| {
        w.a.len() == n && w.a.iter().all(|&x| x <= t) && s_of_exponents(&w.a, t) == w.s
    };
    let entries = [("blocks", &blocks), ("dp", &dp)];
    let ok = entries
        .iter()
        .all(|(_, w)| realized(w) && w.nu_prime() == delta);

    match g.format.unwrap_or(Format::Md) {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), n.into());
            obj.insert("t".into(), t.into());
            obj.insert("delta".into(), delta.into());
            obj.insert("blocks_of".into(), layout.block_width().into());
            obj.insert("full_blocks".into(), layout.blocks.into());
            obj.insert("remainder".into(), layout.remainder.into());
            for (name, w) in entries {
                obj.insert(
                    name.into(),
                    serde_json::json!({
                        "a": w.a,
                        "S": w.s.to_string(),
                        "nu_prime": w.nu_prime(),
                        "realized": realized(w),
                    }),
                );
            }
            println!("{}", serde_json::Value::Object(obj));
        }
        f => {
            let mut tab = Table::new(vec!["source", "a", "S", "nu_prime", "realized"]);
            for (name, w) in entries {
                let a: Vec<String> = w.a.iter().map(ToString::to_string).collect();
                tab.push(vec![
                    name.into(),
                    a.join(" "),
                    w.s.to_string(),
                    w.nu_prime().to_string(),
                    realized(w).to_string(),
                ]);
            }
            if f == Format::Md {
                println!(
                    "n={n} t={t} delta={delta} depth={} ({} blocks of {} edges, remainder {})\n",
                    n - 1 - delta,
                    layout.blocks,
                    layout.block_width(),
                    layout.remainder
                );
            }
            print!("{}", tab.render(f));
        }
    }
    if !ok {
        eprintln!("witness mismatch at n={n} t={t}: expected nu' = {delta}");
        return Ok(Status::Mismatch);
    }
    Ok(Status::Ok)
}

fn dstab(g: &GlobalOpts, range: RangeInclusive<usize>) -> Result<Status> {
    let rows = range
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| Ok((n, dstab_closed(n)?, dstab_scan(n)?, limit_depth(n)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut status = Status::Ok;
    let mut tab = Table::new(vec!["n", "dstab", "dstab_scan", "limit"]);
    for (n, closed, scan, limit) in rows {
        if closed != scan {
            eprintln!("dstab mismatch at n={n}: closed {closed}, scan {scan}");
            status = Status::Mismatch;
        }
        tab.push(vec![
            n.to_string(),
            closed.to_string(),
            scan.to_string(),
            limit.to_string(),
        ]);
    }
    print!("{}", tab.render(g.format.unwrap_or(Format::Csv)));
    Ok(status)
}

struct Demo {
    ideal: MonomialIdeal,
    expected: BTreeSet<MonomialIdeal>,
}

fn demo_ideal(variant: AssradVariant) -> Result<Demo> {
    match variant {
        AssradVariant::Example => {
            let n = 3;
            let p1 = MonomialIdeal::variables(n, &[0, 1]);
            let p2 = MonomialIdeal::variables(n, &[1, 2]);
            let p3 = MonomialIdeal::variables(n, &[0, 2]);
            let q1 = MonomialIdeal::from_exponents(n, [vec![1, 0, 0], vec![0, 2, 0]])?;
            let q2 = MonomialIdeal::from_exponents(n, [vec![0, 1, 0], vec![0, 0, 3]])?;
            let ideal = q1.intersect(&q2)?.intersect(&p3)?;
            let i12 = p1.intersect(&p2)?;
            let i23 = p2.intersect(&p3)?;
            let i123 = i12.intersect(&p3)?;
            Ok(Demo {
                ideal,
                expected: [p1, p2, p3, i12, i23, i123].into_iter().collect(),
            })
        }
        AssradVariant::Principal => {
            let x1 = MonomialIdeal::variables(1, &[0]);
            Ok(Demo {
                ideal: x1.clone(),
                expected: [x1].into_iter().collect(),
            })
        }
        AssradVariant::CoverP3 => {
            let (n, t) = (3, 2);
            let mut expected = BTreeSet::new();
            for mask in 1u64..1 << (n - 1) {
                let s = EdgeSubset::from_mask(n, mask)?;
                if feasible(n, t, &s).is_some() {
                    expected.insert(cover_ideal_edges(n, &s)?);
                }
            }
            Ok(Demo {
                ideal: cover_ideal_path(n)?.power(t),
                expected,
            })
        }
    }
}

fn assrad_demo(g: &GlobalOpts, variant: AssradVariant) -> Result<Status> {
    let demo = demo_ideal(variant)?;
    let got = demo.ideal.assrad_enumerate(ASSRAD_BOX)?;
    let missing: Vec<String> = demo.expected.difference(&got).map(ToString::to_string).collect();
    let extra: Vec<String> = got.difference(&demo.expected).map(ToString::to_string).collect();
    let matches = missing.is_empty() && extra.is_empty();

    if g.format == Some(Format::Json) {
        let out = serde_json::json!({
            "ideal": demo.ideal.to_string(),
            "assrad": got.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "missing": missing,
            "unexpected": extra,
            "matches": matches,
        });
        println!("{out}");
    } else {
        println!("ideal: {}", demo.ideal);
        println!("assrad ({}):", got.len());
        for p in &got {
            println!("  {p}");
        }
        for p in &missing {
            println!("missing: {p}");
        }
        for p in &extra {
            println!("unexpected: {p}");
        }
    }
    Ok(if matches {
        Status::Ok
    } else {
        Status::Mismatch
    })
}
