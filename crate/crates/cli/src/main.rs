mod reproduce;

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use mannheim::bounds::{self, BallTable, DH_SD_F13, DH_SD_F17};
use mannheim::codes::io::parse_matrix;
use mannheim::decode::{self, SyndromeTable};
use mannheim::fp::{Elem, Matrix};
use mannheim::gint::Gaussian;
use mannheim::leelift::{self, GpVector};
use mannheim::ring::prime_over;
use mannheim::selfdual::{self, LpMode};
use mannheim::{Error, GaussPrime, LinearCode, Metric, PrimeContext, DEFAULT_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "mannheim", version, about = "Codes over Gaussian-integer residue fields under the Mannheim metric")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Gaussian prime, e.g. 2+3i (any associate or conjugate).
    #[arg(long, global = true)]
    pi: Option<String>,
    /// Rational prime; picks the Gaussian prime over it (or the modulus for `lift`).
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Matrix file (JSON or plain rows); `-` reads stdin.
    #[arg(long = "gen", global = true)]
    gen: Option<PathBuf>,
    /// Use a seeded random `n,k` code instead of --gen.
    #[arg(long, global = true, value_name = "N,K")]
    random: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Step limit for each exhaustive search.
    #[arg(long, global = true, env = "MANNHEIM_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include the long-running checks.
    #[arg(long, global = true)]
    long: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Lp {
    Exact,
    Float,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Derived structure of the residue field.
    Ctx,
    /// Representatives and weights per coset leader (or per element).
    WeightTable {
        /// One column per element 1..(p-1)/2 instead of per coset.
        #[arg(long)]
        elements: bool,
    },
    /// Lift a code over G_p (p = 3 mod 4) to Z_p and compare enumerators.
    Lift,
    /// Minimum distance under one or both metrics.
    Mindist {
        #[arg(long)]
        metric: Option<Metric>,
    },
    /// Weight distribution.
    Enumerator {
        #[arg(long, default_value = "mannheim")]
        metric: Metric,
    },
    /// Distance bounds that apply to the given parameters.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<u64>,
        /// Hamming distance to convert into a Mannheim upper bound.
        #[arg(long)]
        dh: Option<u64>,
    },
    /// Sphere sizes W(s, n) and ball volumes V(s, n).
    Ball {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// Sphere-packing check for [n, k, d].
    Packing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: u32,
    },
    /// Parameters where a 2-error-correcting perfect code could exist.
    Perfect2 {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        limit: u64,
    },
    /// Gaussian weight enumerator.
    Gwe,
    /// Transform the enumerator and compare with the dual's.
    Macwilliams,
    /// Feasibility bound on self-dual Mannheim distance.
    Dstar {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Lp::Exact)]
        lp: Lp,
        /// Check a single d instead of scanning.
        #[arg(long)]
        at: Option<u32>,
    },
    /// Enumerate self-dual codes of length n up to signed permutations.
    SdEnum {
        #[arg(long)]
        n: usize,
        /// Only the largest Mannheim distance, one code per row class.
        #[arg(long)]
        optimum: bool,
    },
    /// Verify the long self-dual codes.
    SdCatalog,
    /// Decode a received word.
    Decode {
        #[arg(long)]
        received: String,
        #[arg(long, default_value = "mannheim")]
        metric: Metric,
        /// Print every least-weight word of the coset.
        #[arg(long)]
        list_leaders: bool,
        /// The matrix is a parity check rather than a generator.
        #[arg(long)]
        parity: bool,
        /// Exhaustive nearest codeword instead of a table.
        #[arg(long, conflicts_with = "perfect")]
        nn: bool,
        /// Column matching for perfect single-error-correcting codes.
        #[arg(long)]
        perfect: bool,
        /// Write the syndrome table in binary form.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run the golden checks and report each one.
    ReproduceAll,
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Output {
    json: Value,
    csv: Option<String>,
}

impl Output {
    fn json<T: Serialize>(v: &T) -> Self {
        Output {
            json: serde_json::to_value(v).expect("plain data serialises"),
            csv: None,
        }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .expect("thread pool is configured once");
    }
    let name = format!("{:?}", cli.cmd);
    match run(&cli) {
        Ok(out) => match (cli.format, out.csv) {
            (Format::Json, _) => {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("valid JSON"));
                ExitCode::SUCCESS
            }
            (Format::Csv, Some(csv)) => {
                print!("{csv}");
                ExitCode::SUCCESS
            }
            (Format::Csv, None) => {
                let cmd = name.split([' ', '{']).next().unwrap_or("");
                eprintln!("error: UsageError: no CSV form for {cmd}");
                ExitCode::from(64)
            }
        },
        Err(Failure::Usage(m)) => {
            eprintln!("error: UsageError: {m}");
            ExitCode::from(64)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 2 } else { 1 })
        }
    }
}

fn context(cli: &Cli) -> CliResult<Arc<PrimeContext>> {
    let pi = match (&cli.pi, cli.p) {
        (Some(s), None) => s.parse::<GaussPrime>()?,
        (None, Some(p)) => prime_over(p)?,
        (Some(s), Some(p)) => {
            let pi = s.parse::<GaussPrime>()?;
            if pi.p() != p {
                return Err(Error::WrongContext {
                    expected: pi.p(),
                    actual: p,
                }
                .into());
            }
            pi
        }
        (None, None) => return Err(Failure::Usage("--pi or --p is required".into())),
    };
    Ok(PrimeContext::shared(pi)?)
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
    }
}

fn parse_nk(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::Usage(format!("--random expects N,K, got {s:?}"));
    let (n, k) = s.split_once(',').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    if k == 0 || k > n {
        return Err(bad());
    }
    Ok((n, k))
}

/// The code named by --gen (with the field from the file or the flags) or
/// by --random.
fn load_matrix(cli: &Cli) -> CliResult<(Arc<PrimeContext>, Matrix)> {
    match (&cli.gen, &cli.random) {
        (Some(path), None) => {
            let parsed = parse_matrix(&read_input(path)?)?;
            let ctx = match parsed.pi {
                Some(pi) => {
                    let ctx = PrimeContext::shared(pi)?;
                    if cli.pi.is_some() || cli.p.is_some() {
                        let flag = context(cli)?;
                        if flag.p() != ctx.p() {
                            return Err(Error::WrongContext {
                                expected: ctx.p() as u64,
                                actual: flag.p() as u64,
                            }
                            .into());
                        }
                    }
                    ctx
                }
                None => context(cli)?,
            };
            Ok((ctx, parsed.rows))
        }
        (None, Some(spec)) => {
            let ctx = context(cli)?;
            let (n, k) = parse_nk(spec)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            loop {
                let rows: Matrix = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..ctx.p())).collect()).collect();
                if LinearCode::from_generator(ctx.clone(), rows.clone()).is_ok() {
                    return Ok((ctx, rows));
                }
            }
        }
        (Some(_), Some(_)) => Err(Failure::Usage("--gen and --random are exclusive".into())),
        (None, None) => Err(Failure::Usage("--gen or --random is required".into())),
    }
}

fn load_code(cli: &Cli) -> CliResult<LinearCode> {
    let (ctx, rows) = load_matrix(cli)?;
    Ok(LinearCode::from_generator(ctx, rows)?)
}

fn parse_word(s: &str) -> CliResult<Vec<Elem>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Elem>().map_err(|_| Failure::Usage(format!("bad entry {t:?} in received word"))))
        .collect()
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn run(cli: &Cli) -> CliResult<Output> {
    let budget = cli.budget;
    match &cli.cmd {
        Cmd::Ctx => {
            let ctx = context(cli)?;
            let s = ctx.summary();
            let csv = format!(
                "key,value\npi,{}\np,{}\ngamma,{}\nH,{}\nleaders,{}\nS,{}\n",
                s.pi,
                s.p,
                s.gamma,
                join(&s.h, " "),
                join(&s.leaders, " "),
                s.s
            );
            Ok(Output::json(&s).with_csv(csv))
        }
        Cmd::WeightTable { elements } => {
            let ctx = context(cli)?;
            let label = if *elements { "element" } else { "coset" };
            let xs: Vec<Elem> = if *elements {
                (1..=(ctx.p() - 1) / 2).collect()
            } else {
                ctx.leaders().to_vec()
            };
            let reps: Vec<String> = xs.iter().map(|&x| ctx.representative(x).to_string()).collect();
            let ws: Vec<u32> = xs.iter().map(|&x| ctx.weight(x)).collect();
            let csv = format!(
                "{label},{}\nG_{},{}\nweight,{}\n",
                join(&xs, ","),
                ctx.pi(),
                reps.join(","),
                join(&ws, ",")
            );
            let rows: Vec<Value> = xs
                .iter()
                .zip(&reps)
                .zip(&ws)
                .map(|((x, r), w)| json!({ label: x, "representative": r, "weight": w }))
                .collect();
            Ok(Output::json(&json!({ "pi": ctx.pi().to_string(), "p": ctx.p(), "rows": rows })).with_csv(csv))
        }
        Cmd::Lift => lift(cli),
        Cmd::Mindist { metric } => {
            let code = load_code(cli)?;
            let metrics = match metric {
                Some(m) => vec![*m],
                None => vec![Metric::Hamming, Metric::Mannheim],
            };
            let mut obj = json!({ "p": code.p(), "n": code.n(), "k": code.k() });
            let mut csv = String::from("metric,distance\n");
            for m in metrics {
                let d = code.min_distance(m, budget)?;
                obj[format!("d_{}", if m == Metric::Hamming { "h" } else { "pi" })] = json!(d);
                let _ = writeln!(csv, "{m},{d}");
            }
            Ok(Output::json(&obj).with_csv(csv))
        }
        Cmd::Enumerator { metric } => {
            let code = load_code(cli)?;
            let e = code.enumerator(*metric, budget)?;
            let mut csv = String::from("weight,count\n");
            for (w, c) in &e {
                let _ = writeln!(csv, "{w},{c}");
            }
            let terms: Vec<Value> = e.iter().map(|(w, c)| json!({ "weight": w, "count": c })).collect();
            Ok(Output::json(&json!({ "metric": metric, "n": code.n(), "k": code.k(), "distribution": terms })).with_csv(csv))
        }
        Cmd::Bounds { n, k, dh } => {
            let ctx = context(cli)?;
            let mut obj = json!({ "pi": ctx.pi().to_string(), "p": ctx.p(), "n": n, "S": ctx.s_value() });
            if let Some(d) = dh {
                obj["upper_from_dh"] = json!(bounds::upper_bound_dpi(&ctx, *d));
            }
            if *k == Some(1) {
                if let Ok(v) = bounds::dpi_n1_f13(&ctx, *n) {
                    obj["dpi_n1"] = json!(v);
                }
                if let Ok((lo, hi)) = bounds::dpi_n1_f17_bracket(&ctx, *n) {
                    obj["dpi_n1_bracket"] = json!([lo, hi]);
                }
            }
            if *k == Some(n.saturating_sub(1)) && *n >= 2 {
                obj["dpi_nminus1"] = json!(bounds::dpi_nminus1(&ctx, *n));
            }
            if let Some(k) = k {
                if let Ok(v) = bounds::singleton_style_bound_f13(&ctx, *n, *k) {
                    obj["singleton_style"] = json!(v);
                }
            }
            let sd = match ctx.p() {
                13 => Some(DH_SD_F13),
                17 => Some(DH_SD_F17),
                _ => None,
            };
            if let Some(table) = sd {
                let ups = selfdual::sd_upper_table(&ctx, &table);
                let rows: Vec<Value> = table
                    .iter()
                    .zip(&ups)
                    .enumerate()
                    .map(|(i, (d, u))| json!({ "n": 2 * (i + 1), "d_h_sd": d, "d_pi_sd_upper": u }))
                    .collect();
                obj["self_dual_upper"] = json!(rows);
            }
            Ok(Output::json(&obj))
        }
        Cmd::Ball { n, s } => {
            let ctx = context(cli)?;
            let t = BallTable::new(&ctx, *n, *s);
            let mut csv = String::from("s,sphere,ball\n");
            let mut rows = Vec::new();
            for r in 0..=*s {
                let (w, v) = (t.exact(r, *n).to_string(), t.volume(r, *n).to_string());
                let _ = writeln!(csv, "{r},{w},{v}");
                rows.push(json!({ "s": r, "sphere": w, "ball": v }));
            }
            Ok(Output::json(&json!({ "p": ctx.p(), "n": n, "rows": rows })).with_csv(csv))
        }
        Cmd::Packing { n, k, d } => {
            let ctx = context(cli)?;
            if *k > *n {
                return Err(Failure::Usage("k must not exceed n".into()));
            }
            Ok(Output::json(&bounds::sphere_packing_ok(&ctx, *n, *k, *d)))
        }
        Cmd::Perfect2 { r, limit } => {
            let rep = bounds::perfect2_candidates(*r, *limit)?;
            let mut csv = String::from("n,p,prime\n");
            for (c, prime) in rep
                .candidates
                .iter()
                .map(|c| (c, true))
                .chain(rep.rejected_composite.iter().map(|c| (c, false)))
            {
                let _ = writeln!(csv, "{},{},{prime}", c.n, c.p);
            }
            Ok(Output::json(&rep).with_csv(csv))
        }
        Cmd::Gwe => {
            let code = load_code(cli)?;
            let g = selfdual::gwe(&code, budget)?;
            Ok(Output::json(&g).with_csv(gwe_csv(&g)))
        }
        Cmd::Macwilliams => {
            let code = load_code(cli)?;
            let ctx = code.ctx();
            let g = selfdual::gwe(&code, budget)?;
            let size = code.size().ok_or(Error::SearchTooLarge {
                what: "code size",
                needed: u128::MAX,
                budget,
            })?;
            let t = selfdual::macwilliams_transform(ctx, &g, size, budget)?;
            let direct = selfdual::gwe(&code.dual()?, budget)?;
            let agrees = t == direct;
            Ok(Output::json(&json!({ "dual_enumerator": t, "dual_direct": direct, "agrees": agrees }))
                .with_csv(gwe_csv(&t)))
        }
        Cmd::Dstar { n, lp, at } => {
            let ctx = context(cli)?;
            let mode = match lp {
                Lp::Exact => LpMode::Exact,
                Lp::Float => LpMode::Float,
            };
            let sys = selfdual::DstarSystem::new(&ctx, *n, budget)?;
            let steps = match at {
                Some(d) => vec![sys.feasible(*d, mode)],
                None => sys.dstar(mode).steps,
            };
            let mut csv = String::from("d,feasible,variables,equations\n");
            for s in &steps {
                let _ = writeln!(csv, "{},{},{},{}", s.d, s.feasible, s.variables, s.equations);
            }
            let value = match at {
                Some(_) => json!({ "p": ctx.p(), "n": n, "mode": mode, "steps": steps }),
                None => {
                    let d = steps.iter().take_while(|s| s.feasible).count() as u32 + 1;
                    json!({ "p": ctx.p(), "n": n, "mode": mode, "dstar": d, "steps": steps })
                }
            };
            Ok(Output::json(&value).with_csv(csv))
        }
        Cmd::SdEnum { n, optimum } => {
            let ctx = context(cli)?;
            if *optimum {
                let r = selfdual::max_selfdual_distance(&ctx, *n, budget)?;
                let csv = format!("n,max_d_pi\n{},{}\n", r.n, r.max_d_pi);
                return Ok(Output::json(&r).with_csv(csv));
            }
            let e = selfdual::enumerate_selfdual(&ctx, *n, budget)?;
            let mut csv = String::from("size,d_h,d_pi,generator\n");
            for c in &e.classes {
                let g: Vec<String> = c.generator.iter().map(|r| join(r, " ")).collect();
                let _ = writeln!(csv, "{},{},{},{}", c.size, c.d_h, c.d_pi, g.join(";"));
            }
            Ok(Output::json(&e).with_csv(csv))
        }
        Cmd::SdCatalog => {
            let reps = selfdual::verify_catalog(budget)?;
            let mut csv = String::from("name,p,n,k,self_dual,d_h,d_pi,ok\n");
            for r in &reps {
                let _ = writeln!(csv, "{},{},{},{},{},{},{},{}", r.name, r.p, r.n, r.k, r.self_dual, r.d_h, r.d_pi, r.ok);
            }
            Ok(Output::json(&reps).with_csv(csv))
        }
        Cmd::Decode {
            received,
            metric,
            list_leaders,
            parity,
            nn,
            perfect,
            export,
        } => {
            let (ctx, rows) = load_matrix(cli)?;
            let code = if *parity {
                LinearCode::from_parity_check(ctx, rows)?
            } else {
                LinearCode::from_generator(ctx, rows)?
            };
            let r = parse_word(received)?;
            let s = decode::syndrome(&code, &r)?;
            if *nn {
                let d = decode::decode_nn(&code, &r, *metric, budget)?;
                return Ok(Output::json(&json!({ "syndrome": s, "nearest": d })));
            }
            if *perfect {
                let d = decode::decode_perfect(&code, &r, budget)?;
                return Ok(Output::json(&json!({ "syndrome": s, "decoded": d })));
            }
            let table = SyndromeTable::build(&code, *metric, budget)?;
            if let Some(path) = export {
                let f = fs::File::create(path).map_err(|e| Failure::Usage(format!("creating {}: {e}", path.display())))?;
                table
                    .write_binary(std::io::BufWriter::new(f))
                    .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
            }
            let d = table.decode(&r)?;
            let mut obj = json!({
                "metric": metric,
                "syndrome": s,
                "decoded": d,
                "correction_radius": table.correction_radius(),
            });
            if *list_leaders {
                let leaders = table.list_leaders(&r)?;
                let words: Vec<Vec<Elem>> = leaders.iter().map(|u| mannheim::fp::sub_vec(&r, u, code.p())).collect();
                obj["leaders"] = json!(leaders);
                obj["candidates"] = json!(words);
            }
            Ok(Output::json(&obj))
        }
        Cmd::ReproduceAll => {
            let rep = reproduce::run_all(budget, cli.long);
            let mut csv = String::from("id,status,detail\n");
            for i in &rep.items {
                let _ = writeln!(csv, "{},{},\"{}\"", i.id, i.status, i.detail.replace('"', "'"));
            }
            Ok(Output::json(&rep).with_csv(csv))
        }
    }
}

fn gwe_csv(g: &selfdual::Gwe) -> String {
    let mut csv = String::from("composition,count\n");
    for (t, c) in &g.terms {
        let _ = writeln!(csv, "{},{c}", join(t, " "));
    }
    csv
}

/// Rows of Gaussian entries such as `1+2i 0 -i`, reduced mod p.
fn lift(cli: &Cli) -> CliResult<Output> {
    let p = cli.p.ok_or_else(|| Failure::Usage("lift needs --p (a prime = 3 mod 4)".into()))?;
    let p = Elem::try_from(p).map_err(|_| Failure::Usage("--p is too large".into()))?;
    let rows: Vec<GpVector> = match (&cli.gen, &cli.random) {
        (Some(path), None) => read_input(path)?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| {
                let entries = l
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        let g: Gaussian<i64> = t.parse()?;
                        Ok((g.re.rem_euclid(p as i64) as Elem, g.im.rem_euclid(p as i64) as Elem))
                    })
                    .collect::<mannheim::Result<Vec<_>>>()?;
                GpVector::new(p, entries)
            })
            .collect::<mannheim::Result<_>>()?,
        (None, Some(spec)) => {
            let (n, k) = parse_nk(spec)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            loop {
                let g: Vec<GpVector> = (0..k)
                    .map(|_| GpVector::new(p, (0..n).map(|_| (rng.gen_range(0..p), rng.gen_range(0..p))).collect()))
                    .collect::<mannheim::Result<_>>()?;
                if leelift::lift_code(&g).is_ok() {
                    break g;
                }
            }
        }
        _ => return Err(Failure::Usage("lift needs exactly one of --gen or --random".into())),
    };
    let lifted = leelift::lift_code(&rows)?;
    let m = leelift::mannheim_histogram(&rows, cli.budget)?;
    let l = leelift::lee_histogram(&lifted, p, cli.budget)?;
    let mut csv = String::from("weight,mannheim,lee\n");
    for w in m.keys().chain(l.keys()).collect::<std::collections::BTreeSet<_>>() {
        let _ = writeln!(csv, "{w},{},{}", m.get(w).unwrap_or(&0), l.get(w).unwrap_or(&0));
    }
    let hist = |h: &std::collections::BTreeMap<u32, u64>| -> Vec<Value> {
        h.iter().map(|(w, c)| json!({ "weight": w, "count": c })).collect()
    };
    Ok(Output::json(&json!({
        "p": p,
        "lifted": lifted,
        "mannheim": hist(&m),
        "lee": hist(&l),
        "agrees": m == l,
    }))
    .with_csv(csv))
}
