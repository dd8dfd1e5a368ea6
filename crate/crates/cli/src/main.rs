//! `zcenter`: command-line front end for the zcenter-core library.

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use zcenter_core::bands::{band_center_families, conjugacy_types};
use zcenter_core::center::{center_report, count_simple_central_objects, lift_count, obstruction};
use zcenter_core::cohomology::{classify, gamma, Cochain};
use zcenter_core::io::{parse_cocycle_spec, parse_group_spec, parse_spec_vector, parse_universe, LoadedGroup};
use zcenter_core::{CentralObjectSpec, Error, FiniteGroup, PointedCategory, TwistedGroupAlgebra};

#[derive(Parser)]
#[command(name = "zcenter", version, about = "Drinfeld-center invariants of pointed fusion categories and conjugacy types of finite groups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CategoryArgs {
    /// `C<n>`, `S<m>`, `A<m>`, products such as `C2xC2xC2`, or `file:<path>`.
    #[arg(long)]
    group: String,
    /// `zero`, `cup:i,j,k[:N]` or `file:<path>`.
    #[arg(long)]
    cocycle: String,
    /// Coefficient modulus; a multiple of the group exponent.
    #[arg(long)]
    modulus: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, exponent, conjugacy classes and center of a group.
    GroupInfo {
        #[arg(long)]
        group: String,
    },
    /// Cocycle and coboundary verdicts, optionally for gamma at a central element.
    Cohomology {
        #[command(flatten)]
        category: CategoryArgs,
        /// Central element `z`; reports `gamma_{omega,z}` and its twisted algebra.
        #[arg(long)]
        central: Option<usize>,
    },
    /// Whether the lifting obstruction vanishes, per conjugacy class.
    Obstruction {
        #[command(flatten)]
        category: CategoryArgs,
        #[arg(long)]
        class: Option<usize>,
    },
    /// Full report: page terms, obstructions, characteristic kernel, lifts.
    CenterReport {
        #[command(flatten)]
        category: CategoryArgs,
        /// `class:multiplicity,...`; repeatable. Defaults to each class sum.
        #[arg(long)]
        spec: Vec<String>,
    },
    /// Number of central structures on an object, up to isomorphism.
    Lift {
        #[command(flatten)]
        category: CategoryArgs,
        /// `class:multiplicity,...`; absent classes are 0.
        #[arg(long)]
        spec: String,
    },
    /// Number of simple central objects.
    Simples {
        #[command(flatten)]
        category: CategoryArgs,
    },
    /// Conjugacy-type endomorphisms.
    Bands {
        #[command(subcommand)]
        command: BandsCommand,
    },
}

#[derive(Subcommand)]
enum BandsCommand {
    /// Residues n such that some endomorphism sends every g into the class of g^n.
    Types {
        #[arg(long)]
        group: String,
    },
    /// Residues that are types of every group in a comma-separated universe.
    Families {
        #[arg(long)]
        universe: String,
    },
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GroupSpec(_)
            | Error::CocycleSpec(_)
            | Error::SpecVector(_)
            | Error::NotCyclicProduct
            | Error::FactorIndex { .. }
            | Error::ModulusNotDivisible { .. } => Failure::Usage(e.to_string()),
            e => Failure::Library(e),
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = configure_threads() {
        return fail(Failure::Usage(message));
    }
    let mut out = Vec::new();
    match run(&cli, &mut out) {
        Ok(()) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(&out);
            let _ = stdout.flush();
            ExitCode::SUCCESS
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(message) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
        Failure::Library(e) => {
            eprintln!("error: {e}");
            if let Error::NotCocycle { tuple, value } = &e {
                eprintln!("certificate: coboundary value {value} at {tuple:?}");
            }
            ExitCode::from(1)
        }
    }
}

/// `ZCENTER_THREADS` sizes the global pool.
fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("ZCENTER_THREADS") else { return Ok(()) };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("ZCENTER_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn run(cli: &Cli, out: &mut Vec<u8>) -> Outcome {
    match &cli.command {
        Command::GroupInfo { group } => group_info(&load_group(group)?, cli.json, out),
        Command::Cohomology { category, central } => cohomology(category, *central, cli.json, out),
        Command::Obstruction { category, class } => obstructions(category, *class, cli.json, out),
        Command::CenterReport { category, spec } => report(category, spec, cli.json, out),
        Command::Lift { category, spec } => lift(category, spec, cli.json, out),
        Command::Simples { category } => simples(category, cli.json, out),
        Command::Bands { command: BandsCommand::Types { group } } => band_types(group, cli.json, out),
        Command::Bands { command: BandsCommand::Families { universe } } => band_families(universe, cli.json, out),
    }
}

fn load_group(spec: &str) -> Outcome<LoadedGroup> {
    let loaded = parse_group_spec(spec)?;
    if let Some(map) = &loaded.relabeling {
        eprintln!("note: identity moved to index 0; old -> new indices {map:?}");
    }
    Ok(loaded)
}

/// The cocycle, rescaled to the requested modulus or to
/// `lcm(exponent, N)` by default.
fn load_omega(args: &CategoryArgs) -> Outcome<Cochain> {
    let group = load_group(&args.group)?;
    let loaded = parse_cocycle_spec(&args.cocycle, &group)?;
    if loaded.normalization.is_some() {
        eprintln!("note: cocycle was normalized by subtracting a coboundary");
    }
    let omega = loaded.cochain;
    let exp = group.group.exponent();
    let modulus = match args.modulus {
        Some(m) if m == 0 || m % exp != 0 => {
            return Err(Failure::Usage(format!("--modulus {m} is not a positive multiple of the exponent {exp}")))
        }
        Some(m) if m % omega.modulus() != 0 => {
            return Err(Failure::Usage(format!(
                "--modulus {m} is not a multiple of the cocycle modulus {}",
                omega.modulus()
            )))
        }
        Some(m) => m,
        None => lcm(exp, omega.modulus()),
    };
    Ok(omega.rescale(modulus)?)
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn label(group: &FiniteGroup) -> String {
    group.label().unwrap_or("G").to_string()
}

fn emit_json<T: Serialize>(value: &T, out: &mut Vec<u8>) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).expect("report types serialize");
    out.push(b'\n');
    Ok(())
}

macro_rules! line {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to memory")
    };
}

#[derive(Serialize)]
struct GroupInfo {
    abelian: bool,
    center_order: usize,
    class_representatives: Vec<usize>,
    class_sizes: Vec<usize>,
    exponent: u64,
    label: String,
    order: usize,
}

fn group_info(loaded: &LoadedGroup, json: bool, out: &mut Vec<u8>) -> Outcome {
    let g = &loaded.group;
    let classes = g.conjugacy_classes();
    let info = GroupInfo {
        abelian: g.is_abelian(),
        center_order: g.center().len(),
        class_representatives: classes.representatives.clone(),
        class_sizes: classes.class_sizes.clone(),
        exponent: g.exponent(),
        label: label(g),
        order: g.order(),
    };
    if json {
        return emit_json(&info, out);
    }
    line!(out, "group {}", info.label);
    line!(out, "order {}", info.order);
    line!(out, "exponent {}", info.exponent);
    line!(out, "abelian {}", info.abelian);
    line!(out, "classes {}", classes.len());
    for i in 0..classes.len() {
        line!(out, "  class {i}: representative {}, size {}", info.class_representatives[i], info.class_sizes[i]);
    }
    line!(out, "center order {}", info.center_order);
    Ok(())
}

#[derive(Serialize)]
struct GammaInfo {
    element: usize,
    irrep_dimensions: Vec<usize>,
    is_coboundary: bool,
    regular_classes: usize,
}

#[derive(Serialize)]
struct CohomologyInfo {
    central: Option<GammaInfo>,
    degree: usize,
    failure_certificate: Option<Vec<usize>>,
    is_coboundary: bool,
    is_cocycle: bool,
    modulus: u64,
}

fn cohomology(args: &CategoryArgs, central: Option<usize>, json: bool, out: &mut Vec<u8>) -> Outcome {
    let omega = load_omega(args)?;
    let verdict = classify(&omega)?;
    let central = match central {
        None => None,
        Some(z) => {
            omega.group().check_element(z)?;
            let gam = gamma(&omega, z)?;
            let gamma_verdict = classify(&gam)?;
            let profile = TwistedGroupAlgebra::new(gam)?.irrep_profile()?;
            Some(GammaInfo {
                element: z,
                irrep_dimensions: profile.dimensions,
                is_coboundary: gamma_verdict.is_coboundary,
                regular_classes: profile.regular_class_count,
            })
        }
    };
    let info = CohomologyInfo {
        central,
        degree: omega.degree(),
        failure_certificate: verdict.failure_certificate,
        is_coboundary: verdict.is_coboundary,
        is_cocycle: verdict.is_cocycle,
        modulus: omega.modulus(),
    };
    if json {
        return emit_json(&info, out);
    }
    line!(out, "degree {} cochain modulo {}", info.degree, info.modulus);
    line!(out, "cocycle {}", info.is_cocycle);
    if let Some(t) = &info.failure_certificate {
        line!(out, "cocycle condition fails at {t:?}");
    }
    line!(out, "coboundary {}", info.is_coboundary);
    if let Some(c) = &info.central {
        line!(out, "gamma at {}: coboundary {}", c.element, c.is_coboundary);
        line!(out, "  regular classes {}", c.regular_classes);
        line!(out, "  irreducible dimensions {:?}", c.irrep_dimensions);
    }
    Ok(())
}

fn category(args: &CategoryArgs) -> Outcome<PointedCategory> {
    Ok(PointedCategory::new(load_omega(args)?)?)
}

#[derive(Serialize)]
struct ObstructionInfo {
    centralizer_order: usize,
    class: usize,
    representative: usize,
    vanishes: bool,
}

#[derive(Serialize)]
struct ObstructionList {
    classes: Vec<ObstructionInfo>,
    group: String,
    modulus: u64,
}

fn obstructions(args: &CategoryArgs, class: Option<usize>, json: bool, out: &mut Vec<u8>) -> Outcome {
    let cat = category(args)?;
    let classes: Vec<usize> = match class {
        Some(i) => vec![i],
        None => (0..cat.class_count()).collect(),
    };
    let list = ObstructionList {
        classes: classes
            .into_iter()
            .map(|i| {
                let o = obstruction(&cat, i)?;
                Ok(ObstructionInfo {
                    centralizer_order: o.twist.centralizer.group.order(),
                    class: i,
                    representative: o.twist.representative,
                    vanishes: o.vanishes(),
                })
            })
            .collect::<Result<_, Error>>()?,
        group: label(cat.group()),
        modulus: cat.modulus(),
    };
    if json {
        return emit_json(&list, out);
    }
    line!(out, "obstructions for {} modulo {}", list.group, list.modulus);
    for o in &list.classes {
        let status = if o.vanishes { "vanishes" } else { "does not vanish" };
        line!(out, "  class {} (representative {}, |C| = {}): {status}", o.class, o.representative, o.centralizer_order);
    }
    Ok(())
}

fn report(args: &CategoryArgs, specs: &[String], json: bool, out: &mut Vec<u8>) -> Outcome {
    let cat = category(args)?;
    let specs: Vec<CentralObjectSpec> =
        specs.iter().map(|s| parse_spec_vector(s, cat.class_count())).collect::<Result<_, Error>>()?;
    let r = center_report(&cat, &specs)?;
    if json {
        return emit_json(&r, out);
    }
    line!(out, "center of Vec_G^omega for G = {}, modulus {}", r.group, r.modulus);
    let p = &r.e_pages;
    for (name, t) in [("E1^00", &p.e1_00), ("E1^01", &p.e1_01), ("E1^10", &p.e1_10), ("E1^11", &p.e1_11), ("E1^21", &p.e1_21), ("E2^01", &p.e2_01)] {
        line!(out, "{name}: {} (rank {})", t.description, t.rank);
    }
    line!(out, "E2^00: {} class sums", p.e2_00.len());
    for s in &p.e2_00 {
        line!(out, "  y_{} = class of {} ({} elements)", s.class, s.representative, s.size);
    }
    line!(out, "E2^11: characters with invariant factors {:?} (order {})", p.e2_11.invariant_factors, p.e2_11.order());
    line!(out, "universal grading: {}", p.universal_grading);
    line!(out, "obstructions:");
    for o in &r.obstructions {
        line!(out, "  class {} (representative {}): {}", o.class, o.representative, if o.vanishes { "vanishes" } else { "does not vanish" });
    }
    line!(out, "kernel of the characteristic map: order {}", r.kernel_char.order());
    line!(out, "lifts:");
    for l in &r.lifts {
        line!(out, "  {:?}: {}", l.spec.multiplicities, l.count);
    }
    line!(out, "simple central objects: {}", r.simple_central_objects);
    Ok(())
}

#[derive(Serialize)]
struct LiftInfo {
    count: u128,
    group: String,
    modulus: u64,
    spec: CentralObjectSpec,
}

fn lift(args: &CategoryArgs, spec: &str, json: bool, out: &mut Vec<u8>) -> Outcome {
    let cat = category(args)?;
    let spec = parse_spec_vector(spec, cat.class_count())?;
    let count = lift_count(&cat, &spec)?;
    if json {
        return emit_json(&LiftInfo { count, group: label(cat.group()), modulus: cat.modulus(), spec }, out);
    }
    line!(out, "{count}");
    Ok(())
}

#[derive(Serialize)]
struct ClassSimples {
    class: usize,
    dimensions: Vec<usize>,
}

#[derive(Serialize)]
struct SimplesInfo {
    classes: Vec<ClassSimples>,
    count: usize,
    group: String,
    modulus: u64,
}

fn simples(args: &CategoryArgs, json: bool, out: &mut Vec<u8>) -> Outcome {
    let cat = category(args)?;
    let count = count_simple_central_objects(&cat)?;
    let classes = (0..cat.class_count())
        .map(|i| Ok(ClassSimples { class: i, dimensions: cat.profile(i)?.dimensions.clone() }))
        .collect::<Result<Vec<_>, Error>>()?;
    if json {
        return emit_json(&SimplesInfo { classes, count, group: label(cat.group()), modulus: cat.modulus() }, out);
    }
    line!(out, "{count}");
    Ok(())
}

#[derive(Serialize)]
struct Witness {
    images: Vec<usize>,
    residue: u64,
}

#[derive(Serialize)]
struct TypesInfo {
    exponent: u64,
    group: String,
    types: Vec<u64>,
    witnesses: Vec<Witness>,
}

fn band_types(group: &str, json: bool, out: &mut Vec<u8>) -> Outcome {
    let g = load_group(group)?.group;
    let result = conjugacy_types(&g)?;
    let info = TypesInfo {
        exponent: result.exponent,
        group: label(&g),
        types: result.types.iter().copied().collect(),
        witnesses: result
            .witnesses
            .iter()
            .map(|(&n, alpha)| Witness { images: alpha.images().to_vec(), residue: n })
            .collect(),
    };
    if json {
        return emit_json(&info, out);
    }
    line!(out, "conjugacy types of {} modulo {}: {:?}", info.group, info.exponent, info.types);
    Ok(())
}

#[derive(Serialize)]
struct FamiliesInfo {
    modulus: u64,
    residues: Vec<u64>,
    universe: Vec<String>,
}

fn band_families(universe: &str, json: bool, out: &mut Vec<u8>) -> Outcome {
    let groups: Vec<Arc<FiniteGroup>> = parse_universe(universe)?;
    if groups.is_empty() {
        return Err(Failure::Usage("empty universe".into()));
    }
    let fam = band_center_families(&groups)?;
    let info = FamiliesInfo {
        modulus: fam.modulus,
        residues: fam.residues.into_iter().collect(),
        universe: groups.iter().map(|g| label(g)).collect(),
    };
    if json {
        return emit_json(&info, out);
    }
    line!(out, "upper bound on the center over {{{}}}", info.universe.join(", "));
    line!(out, "residues modulo {}: {:?}", info.modulus, info.residues);
    Ok(())
}
