//! Command handlers and the exit-code policy.

use num::BigUint;
use serde_json::json;

use cevian_core::arrangement::Arrangement;
use cevian_core::ceva::{self, ConjectureFamily};
use cevian_core::counting::{self, DProvenance};
use cevian_core::oracle::{self, OracleOptions};
use cevian_core::Error;

use crate::render::{self, Highlight};
use crate::{
    config, segment_limit, Command, CountArgs, FanArgs, RenderArgs, ScanArgs, SeqArgs, SeqFormat,
    SeqName, TableArgs, TableFormat,
};

/// Failure classes, mapped to exit codes: validation 1, internal
/// consistency 2, I/O 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Consistency(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => CliError::Consistency(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Render(args) => cmd_render(args),
        Command::Seq(args) => cmd_seq(args),
        Command::Fan(args) => cmd_fan(args),
    }
}

fn cmd_count(args: CountArgs) -> Result<(), CliError> {
    let config = config::resolve(&args.source)?;
    let arr = Arrangement::build(config)?;
    let d = arr.concurrency_points().len() as u64;

    // on equal divisions the concurrency equation must agree with geometry
    if let Some(n) = args.source.equal {
        let from_equation = ceva::count_concurrencies(n)?;
        if from_equation != d {
            return Err(CliError::Consistency(format!(
                "geometric d={d} but the concurrency equation gives {from_equation} for n={n}"
            )));
        }
    }

    let (a, b, c) = arr.counts();
    let report = counting::count_triangles_with(a, b, c, d, DProvenance::Geometric)?;

    let oracle_result = if args.oracle {
        let opts = OracleOptions {
            segment_limit: segment_limit()?,
            collect_triples: false,
        };
        let oracle_report = oracle::enumerate_triangles_with(&arr, opts)?;
        let agrees = BigUint::from(oracle_report.triangle_count) == report.triangle_count;
        Some((oracle_report.triangle_count, agrees))
    } else {
        None
    };

    if args.json {
        let mut obj = json!({
            "a": report.a.to_string(),
            "b": report.b.to_string(),
            "c": report.c.to_string(),
            "d": report.d.to_string(),
            "d_provenance": report.d_provenance.to_string(),
            "triangle_count": report.triangle_count.to_string(),
        });
        if let Some((count, agrees)) = &oracle_result {
            obj["oracle_count"] = json!(count.to_string());
            obj["oracle_agrees"] = json!(agrees);
        }
        println!("{obj}");
    } else {
        println!("a = {}, b = {}, c = {}", report.a, report.b, report.c);
        println!("d = {} ({})", report.d, report.d_provenance);
        println!("triangles = {}", report.triangle_count);
        if let Some((count, agrees)) = &oracle_result {
            println!("oracle triangles = {count}");
            println!("oracle agrees: {}", if *agrees { "yes" } else { "NO" });
        }
    }

    if let Some((count, false)) = oracle_result {
        return Err(CliError::Consistency(format!(
            "formula gives {} but the enumerator found {count}",
            report.triangle_count
        )));
    }
    Ok(())
}

struct TableRow {
    n: u64,
    d: u64,
    triangles: BigUint,
    /// Prime-power closed form and whether it matches, when n = p^m.
    closed_form: Option<(BigUint, bool)>,
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let (n_min, n_max) = (args.equal_range[0], args.equal_range[1]);
    if n_min < 2 || n_min > n_max {
        return Err(CliError::Validation(format!(
            "--equal-range needs 2 <= N_MIN <= N_MAX, got {n_min} {n_max}"
        )));
    }
    let ds = ceva::d_sequence(n_min, n_max)?;
    let rows: Vec<TableRow> = ds
        .into_iter()
        .zip(n_min..=n_max)
        .map(|(d, n)| {
            let side = u32::try_from(n - 1)
                .map_err(|_| CliError::Validation(format!("n={n} is too large to tabulate")))?;
            let triangles = counting::count_triangles_with(side, side, side, d, DProvenance::CevaEquation)?
                .triangle_count;
            let closed_form = match ceva::prime_power(n) {
                Some((p, m)) => {
                    let report = counting::equal_division_count(p, m)?;
                    let matches = report.d == d && report.triangle_count == triangles;
                    Some((report.triangle_count, matches))
                }
                None => None,
            };
            Ok(TableRow {
                n,
                d,
                triangles,
                closed_form,
            })
        })
        .collect::<Result<_, CliError>>()?;

    match args.format {
        TableFormat::Table => print_table(&rows),
        TableFormat::Csv => {
            println!("n,d,triangles,closed_form,closed_form_matches");
            for row in &rows {
                let (cf, ok) = match &row.closed_form {
                    Some((count, matches)) => (count.to_string(), matches.to_string()),
                    None => (String::new(), String::new()),
                };
                println!("{},{},{},{},{}", row.n, row.d, row.triangles, cf, ok);
            }
        }
        TableFormat::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = json!({
                        "n": row.n.to_string(),
                        "d": row.d.to_string(),
                        "triangle_count": row.triangles.to_string(),
                    });
                    if let Some((count, matches)) = &row.closed_form {
                        obj["closed_form_count"] = json!(count.to_string());
                        obj["closed_form_matches"] = json!(matches);
                    }
                    obj
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
    Ok(())
}

fn print_table(rows: &[TableRow]) {
    let headers = ["n", "d", "triangles", "closed-form", "match"];
    let render_row = |row: &TableRow| -> [String; 5] {
        let (cf, ok) = match &row.closed_form {
            Some((count, matches)) => (
                count.to_string(),
                if *matches { "yes" } else { "NO" }.to_string(),
            ),
            None => ("-".to_string(), "-".to_string()),
        };
        [
            row.n.to_string(),
            row.d.to_string(),
            row.triangles.to_string(),
            cf,
            ok,
        ]
    };
    let mut widths: [usize; 5] = headers.map(str::len);
    let rendered: Vec<[String; 5]> = rows.iter().map(render_row).collect();
    for cells in &rendered {
        for (w, cell) in widths.iter_mut().zip(cells) {
            *w = (*w).max(cell.len());
        }
    }
    let print_cells = |cells: [&str; 5]| {
        let line = cells
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        println!("{line}");
    };
    print_cells(headers);
    for cells in &rendered {
        print_cells([&cells[0], &cells[1], &cells[2], &cells[3], &cells[4]]);
    }
}

fn cmd_scan(args: ScanArgs) -> Result<(), CliError> {
    let family = match args.family {
        1 => ConjectureFamily::PTimesTwoPMinusOne,
        2 => ConjectureFamily::PSquaredTimesTwoPPlusOne,
        _ => unreachable!("clap restricts --family to 1..=2"),
    };
    println!("# family {}: n = {}, both primes required", args.family, family);
    for record in ceva::scan_family(family, args.p_max, args.count_all) {
        let witness = match &record.witness {
            Some(w) => w.to_string().replace(' ', ""),
            None => "-".to_string(),
        };
        let mut line = format!(
            "p={}  n={}  companion={}  has_solution={}  witness={}",
            record.p, record.n, record.companion_prime, record.has_solution, witness
        );
        if let Some(count) = record.solution_count {
            line.push_str(&format!("  solutions={count}"));
        }
        println!("{line}");
    }
    Ok(())
}

fn cmd_seq(args: SeqArgs) -> Result<(), CliError> {
    if args.limit < 2 {
        return Err(CliError::Validation(format!(
            "--limit must be at least 2, got {}",
            args.limit
        )));
    }
    let (name, start, values) = match args.name {
        SeqName::DOfN => ("d-of-n", Some(2u64), ceva::d_sequence(2, args.limit)?),
        SeqName::OddPositive => ("odd-positive", None, ceva::odd_positive_list(args.limit)),
    };
    match args.format {
        SeqFormat::Lines => {
            for v in &values {
                println!("{v}");
            }
        }
        SeqFormat::Json => {
            let mut obj = json!({
                "name": name,
                "limit": args.limit.to_string(),
                "values": values.iter().map(u64::to_string).collect::<Vec<_>>(),
            });
            if let Some(start) = start {
                obj["start"] = json!(start.to_string());
            }
            println!("{obj}");
        }
    }
    Ok(())
}

fn cmd_fan(args: FanArgs) -> Result<(), CliError> {
    let b = counting::fan_parallel_count(args.apex, args.parallel)?;
    let (p, r) = (b.apex_lines, b.parallel_lines);
    println!("apex lines           : {p}");
    println!("parallel lines       : {r}");
    println!("total triples        : C({},3) = {}", p + r, b.total_triples);
    println!("apex-concurrent      : C({p},3) = {}", b.apex_concurrent);
    println!("all-parallel         : C({r},3) = {}", b.all_parallel);
    println!(
        "parallel-pair + apex : C({r},2)*{p} = {}",
        b.parallel_pair_with_apex
    );
    println!(
        "triangles = {} - {} - {} - {} = {}",
        b.total_triples,
        b.apex_concurrent,
        b.all_parallel,
        b.parallel_pair_with_apex,
        b.triangle_count
    );
    Ok(())
}

fn cmd_render(args: RenderArgs) -> Result<(), CliError> {
    let config = config::resolve(&args.source)?;
    let arr = Arrangement::build(config)?;
    let highlight = Highlight::parse(&args.highlight, &arr)?;
    let svg = render::render(&arr, &highlight, segment_limit()?)?;
    match &args.out {
        Some(path) => std::fs::write(path, svg)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{svg}"),
    }
    Ok(())
}
