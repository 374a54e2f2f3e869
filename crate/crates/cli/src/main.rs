use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kschur_mn::actions::{CyclicInterval, Representation};
use kschur_mn::correspondences::{
    bounded_of_core, core_of_bounded, core_of_word, k_conjugate, word_of_bounded, BoundedPartition, GeneratorWord,
};
use kschur_mn::hookwords::{
    anti_to_hook, eg_tableau, enumerate, ConnectivityFilter, HookFilter, HookType, Side,
};
use kschur_mn::mnrule::{mn_expand, verify_instances, Expansion, Instance, Variant};
use kschur_mn::shapes::{residue_grid, Core, Partition};

#[derive(Parser)]
#[command(name = "kschur-mn", version, about = "Murnaghan-Nakayama rule for K-k-Schur and k-Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand p_r times the basis element at lambda.
    Expand {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated parts; empty for the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Convert between bounded partitions, cores and words.
    Convert {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Also print the residues of the core.
        #[arg(long)]
        grid: bool,
    },
    /// List weak hook words of length r with their classification.
    Hookwords {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "type", value_enum)]
        hook_type: Option<TypeArg>,
        #[arg(long)]
        asc: Option<usize>,
        #[arg(long, value_enum)]
        con: Option<ConArg>,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Edelman-Greene insertion over the cyclic interval of the word's support.
    Eg {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
        /// Also rewrite the word, taken as an anti-weak hook word, into a hook word.
        #[arg(long, value_enum)]
        to_hook: Option<RepArg>,
    },
    /// Compare the rule against the brute-force expansion.
    Verify {
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 5)]
        sizemax: usize,
        #[arg(long, value_delimiter = ',', default_value = "K,S")]
        variants: Vec<VariantArg>,
        /// File of "k r lambda variant" lines, "-" for the empty partition.
        #[arg(long)]
        batch: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "S", alias = "s")]
    S,
}

impl VariantArg {
    fn variant(self) -> Variant {
        match self {
            VariantArg::K => Variant::K,
            VariantArg::S => Variant::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Bounded,
    Core,
    Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Bounded,
    Core,
    Word,
    Kconj,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "V", alias = "v")]
    V,
    #[value(name = "U", alias = "u")]
    U,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConArg {
    C,
    Notc,
    Wc,
    Notwc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Star,
    Dot,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_k(k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage("k must be at least 1".into()));
    }
    Ok(())
}

fn check_r(k: usize, r: usize) -> Result<(), Failure> {
    check_k(k)?;
    if r == 0 || r > k {
        return Err(Failure::Usage(format!("r must satisfy 1 <= r <= k, got r = {r}, k = {k}")));
    }
    Ok(())
}

fn parse_bounded(s: &str, k: usize) -> Result<BoundedPartition, Failure> {
    let s = if s.trim() == "-" { "" } else { s };
    Ok(BoundedPartition::new(s.parse::<Partition>()?, k)?)
}

fn render_text(e: &Expansion) -> String {
    let mut out = format!("k={} r={} variant={} lambda=({})\n", e.k, e.r, e.variant, e.lambda);
    let rows: Vec<(String, i64)> = e.sorted_terms().map(|(mu, c)| (format!("({mu})"), c)).collect();
    let width = rows.iter().map(|(m, _)| m.len()).max().unwrap_or(0);
    for (mu, c) in rows {
        out.push_str(&format!("{mu:<width$}  {c}\n"));
    }
    out
}

fn expand(variant: Variant, k: usize, r: usize, lambda: &str, format: Format) -> Result<(), Failure> {
    check_r(k, r)?;
    let lambda = parse_bounded(lambda, k)?;
    let e = mn_expand(&lambda, r, variant)?;
    match format {
        Format::Text => print!("{}", render_text(&e)),
        Format::Json => println!("{}", e.to_json()),
    }
    Ok(())
}

fn convert(k: usize, from: Source, to: Target, value: &str, grid: bool) -> Result<(), Failure> {
    check_k(k)?;
    let core = match from {
        Source::Bounded => core_of_bounded(&parse_bounded(value, k)?),
        Source::Core => Core::new(value.parse::<Partition>()?, k)?,
        Source::Word => core_of_word(&GeneratorWord::parse(k, value)?),
    };
    let bounded = bounded_of_core(&core);
    match to {
        Target::Bounded => println!("{bounded}"),
        Target::Core => println!("{core}"),
        Target::Word => println!("{}", word_of_bounded(&bounded)),
        Target::Kconj => println!("{}", k_conjugate(&bounded)),
    }
    if grid {
        print!("{}", residue_grid(core.shape(), k + 1));
    }
    Ok(())
}

fn hookwords(
    k: usize,
    r: usize,
    hook_type: Option<TypeArg>,
    asc: Option<usize>,
    con: Option<ConArg>,
    side: Option<SideArg>,
) -> Result<(), Failure> {
    check_r(k, r)?;
    let filter = HookFilter {
        hook_type: hook_type.map(|t| match t {
            TypeArg::V => HookType::V,
            TypeArg::U => HookType::U,
        }),
        asc,
        connectivity: con.map(|c| match c {
            ConArg::C => ConnectivityFilter::Connected,
            ConArg::Notc => ConnectivityFilter::NotConnected,
            ConArg::Wc => ConnectivityFilter::WeakConnected,
            ConArg::Notwc => ConnectivityFilter::NotWeakConnected,
        }),
        side: side.map(|s| match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }),
    };
    for (w, class) in enumerate(k, r, &filter) {
        println!("{w}\t{class}");
    }
    Ok(())
}

fn eg(word: &str, k: usize, to_hook: Option<RepArg>) -> Result<(), Failure> {
    check_k(k)?;
    let w = GeneratorWord::parse(k, word)?;
    let order = CyclicInterval::new(&w.support(), k)?;
    let t = eg_tableau(w.letters(), &order);
    let reading: Vec<String> = t.reading_word().iter().map(|x| x.to_string()).collect();
    println!("rows: {t}");
    println!("reading word: {}", reading.join(","));
    if let Some(rep) = to_hook {
        let rep = match rep {
            RepArg::Star => Representation::Star,
            RepArg::Dot => Representation::Dot,
        };
        println!("hook word: {}", anti_to_hook(&w, rep)?);
    }
    Ok(())
}

fn parse_batch(path: &PathBuf) -> Result<Vec<Instance>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [k, r, lambda, variant] = fields.as_slice() else {
            return Err(Failure::Usage(format!("line {}: expected \"k r lambda variant\"", n + 1)));
        };
        let bad = |what: &str| Failure::Usage(format!("line {}: bad {what}", n + 1));
        let k: usize = k.parse().map_err(|_| bad("k"))?;
        let r: usize = r.parse().map_err(|_| bad("r"))?;
        check_r(k, r)?;
        out.push(Instance { lambda: parse_bounded(lambda, k)?, r, variant: variant.parse()? });
    }
    Ok(out)
}

fn verify(kmax: usize, sizemax: usize, variants: &[VariantArg], batch: Option<&PathBuf>) -> Result<(), Failure> {
    let instances = match batch {
        Some(path) => parse_batch(path)?,
        None => {
            check_k(kmax)?;
            let variants: Vec<Variant> = variants.iter().map(|v| v.variant()).collect();
            kschur_mn::mnrule::grid(kmax, sizemax, &variants)
        }
    };
    let report = verify_instances(&instances)?;
    for (k, variant, count) in &report.counts {
        println!("k={k} {variant}: {count}");
    }
    match report.mismatch {
        Some(m) => Err(Failure::Mismatch(format!("mismatch after {} instances: {m}", report.checked))),
        None => {
            println!("ok: {} instances", report.checked);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { variant, k, r, lambda, format } => expand(variant.variant(), k, r, &lambda, format),
        Command::Convert { k, from, to, value, grid } => convert(k, from, to, &value, grid),
        Command::Hookwords { k, r, hook_type, asc, con, side } => hookwords(k, r, hook_type, asc, con, side),
        Command::Eg { word, k, to_hook } => eg(&word, k, to_hook),
        Command::Verify { kmax, sizemax, variants, batch } => verify(kmax, sizemax, &variants, batch.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
