//! The `extkit` command line. Reports are JSON values rendered either as JSON or as indented text.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::autext::{aut_preserving, aut_preserving_brute_force, compatible_pairs, gauge_group, lift_group_action, CompatiblePair, LiftedAction, WellsContext};
use crate::catalog::{catalog_names, identify, named};
use crate::cochain::Cochain;
use crate::config::{table_hash, AutCache, Config};
use crate::crossmod::{decompose, enlarge, obstruction_q_seeded, validate_crossed_module};
use crate::error::{Error, Result};
use crate::factor::{build_extension, equivalent, is_split, FactorSystem, OuterActionLift};
use crate::group::{Automorphism, Group, OuterClassTable};
use crate::gs::{build_gs, reduce_to_abelian};
use crate::io;
use crate::kernel::{all_kernels, characteristic_class_seeded, classify, kernel_of_lift, GKernel};
use crate::nonabelian::{seven_term_prefix, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "extkit", version, about = "Extensions of finite groups by non-abelian kernels")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Node budget for generator-propagation searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Largest group order any command will enumerate.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_order: usize,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized self-checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for cached automorphism groups. EXTKIT_CACHE takes precedence.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Group information.
    #[command(subcommand)]
    Group(GroupCmd),
    /// G-kernels (G, N, [S]).
    #[command(subcommand)]
    Kernel(KernelCmd),
    /// Extensions given by factor systems.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Crossed modules.
    #[command(subcommand)]
    Crossmod(CrossmodCmd),
    /// The group G^S and reduction to abelian kernels.
    #[command(subcommand)]
    Gs(GsCmd),
    /// Automorphisms of extensions.
    #[command(subcommand)]
    Aut(AutCmd),
    /// Sweeps over catalog groups.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// Order, center and Aut/Inn/Out sizes.
    Info { spec: String },
}

/// G and N are catalog names or group documents; S is `trivial`, `central`, `inversion` or an action document.
#[derive(Args, Debug)]
pub struct KernelArgs {
    pub g: String,
    pub n: String,
    pub s: String,
}

#[derive(Subcommand, Debug)]
pub enum KernelCmd {
    /// Validate an outer action lift and report its outer classes.
    Check(KernelArgs),
    /// The characteristic class in H^3(G, Z(N)).
    Obstruction(KernelArgs),
}

#[derive(Subcommand, Debug)]
pub enum ExtCmd {
    /// All extensions of the kernel up to equivalence.
    Classify {
        #[command(flatten)]
        kernel: KernelArgs,
        /// Write one extension document per class into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The Cayley table of N x_(S, omega) G.
    Build { g: String, n: String, factor_system: PathBuf },
    /// Decide equivalence of two extensions.
    Equiv { e1: PathBuf, e2: PathBuf },
    /// Decide whether an extension splits.
    Split { e: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum CrossmodCmd {
    /// Check the crossed-module axioms.
    Check { file: PathBuf },
    /// The obstruction class in H^3(coker alpha, ker alpha).
    Obstruct { file: PathBuf },
    /// Try to enlarge the crossed module to an extension.
    Enlarge { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum GsCmd {
    /// Build G^S from a kernel document.
    Build { kernel: PathBuf },
    /// Reduce an extension to a Z(N)-extension of G^S.
    Reduce { ext: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum AutCmd {
    /// Aut(G^, N) and the Wells sequence counts.
    List {
        ext: PathBuf,
        /// Cross-check against filtering all automorphisms of the total group.
        #[arg(long)]
        brute_force: bool,
    },
    /// The Wells class of a compatible pair.
    Wells { ext: PathBuf, pair: PathBuf },
    /// The gauge group, computed two ways.
    Gauge { ext: PathBuf },
    /// Lift an action of H on (N, G) to the extension.
    Liftaction { ext: PathBuf, h: String, psi: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum SearchCmd {
    /// Report kernels with nonzero characteristic class.
    Obstructed {
        #[arg(long, default_value_t = 4)]
        gmax: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
}

/// Exit code and the text written to stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => 3,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let cfg = Config {
        max_order: cli.opts.max_order,
        budget: cli.opts.budget,
        seed: cli.opts.seed,
        cache_dir: Config::resolve_cache_dir(cli.opts.cache_dir.clone()),
    };
    let start = Instant::now();
    let result = execute(&cli.cmd, &cfg);
    let mut stderr = String::new();
    if cli.opts.timing {
        stderr.push_str(&format!("elapsed_ms: {}\n", start.elapsed().as_millis()));
    }
    match result {
        Ok((code, report)) => Outcome { code, stdout: render(&report, cli.opts.json), stderr },
        Err(e) => {
            let code = exit_code(&e);
            let err = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
            if cli.opts.json {
                Outcome { code, stdout: render(&err, true), stderr }
            } else {
                stderr.push_str(&format!("error: {e}\n"));
                Outcome { code, stdout: String::new(), stderr }
            }
        }
    }
}

pub fn render(v: &Value, as_json: bool) -> String {
    if as_json {
        return serde_json::to_string_pretty(v).expect("reports serialize") + "\n";
    }
    let mut out = String::new();
    render_text(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(m) if m.is_empty() => Some("{}".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(" ")))
        }
        _ => None,
    }
}

fn render_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap())),
    }
}

fn report(command: &str, result: Value, provenance: Value) -> Value {
    json!({ "command": command, "result": result, "provenance": provenance })
}

fn maps_json(maps: &[Automorphism]) -> Value {
    Value::Array(maps.iter().map(|a| json!(a.forward())).collect())
}

fn cochain_json(c: &Cochain) -> Value {
    let mut m = Map::new();
    for (t, v) in c.entries() {
        if v != 0 {
            m.insert(t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), json!(v));
        }
    }
    Value::Object(m)
}

fn group_json(g: &Group) -> Value {
    json!({ "order": g.order(), "identified": identify(g), "sha256": table_hash(g) })
}

fn ok(v: Value) -> Result<(i32, Value)> {
    Ok((0, v))
}

struct Ctx<'a> {
    cfg: &'a Config,
    cache: AutCache,
}

impl Ctx<'_> {
    fn group(&self, spec: &str) -> Result<Group> {
        io::resolve_group(spec, self.cfg.max_order)
    }

    fn table(&self, n: &Group) -> Result<Arc<OuterClassTable>> {
        Ok(Arc::new(OuterClassTable::from_automorphisms(n, self.cache.automorphisms(n)?)))
    }

    fn lift(&self, a: &KernelArgs) -> Result<OuterActionLift> {
        let g = self.group(&a.g)?;
        let n = self.group(&a.n)?;
        let s = io::resolve_action(&a.s, &g, &n)?;
        OuterActionLift::new(&g, &n, s)
    }

    fn kernel(&self, lift: OuterActionLift) -> Result<GKernel> {
        let table = self.table(lift.n())?;
        kernel_of_lift(&table, lift)
    }

    fn extension(&self, path: &Path) -> Result<FactorSystem> {
        let fs = io::parse_extension(&io::read(path)?)?;
        let total = fs.g().order() * fs.n().order();
        if total > self.cfg.max_order {
            return Err(Error::bound("extension order", total, self.cfg.max_order));
        }
        Ok(fs)
    }
}

fn execute(cmd: &Command, cfg: &Config) -> Result<(i32, Value)> {
    let ctx = Ctx { cfg, cache: cfg.cache() };
    match cmd {
        Command::Group(GroupCmd::Info { spec }) => {
            let g = ctx.group(spec)?;
            let table = ctx.table(&g)?;
            let z = g.center().order();
            ok(report(
                "group info",
                json!({
                    "order": g.order(),
                    "label": g.label(),
                    "identified": identify(&g),
                    "abelian": g.is_abelian(),
                    "center": z,
                    "aut": table.automorphisms().len(),
                    "inn": g.order() / z,
                    "out": table.num_classes(),
                    "generators": g.generators(),
                }),
                json!({ "sha256": table_hash(&g) }),
            ))
        }
        Command::Kernel(KernelCmd::Check(a)) => {
            let lift = ctx.lift(a)?;
            let k = ctx.kernel(lift.clone())?;
            let exactness = if lift.is_homomorphism() {
                Some(seven_term_prefix(k.g(), k.n(), lift.maps(), cfg.budget)?.is_exact())
            } else {
                None
            };
            ok(report(
                "kernel check",
                json!({
                    "valid": true,
                    "outer_classes": k.classes(),
                    "out_order": k.table().num_classes(),
                    "trivial": k.is_trivial(),
                    "lift_is_homomorphism": lift.is_homomorphism(),
                    "center": lift.center().order(),
                    "seven_term_exact": exactness,
                }),
                json!({ "lift": maps_json(lift.maps()) }),
            ))
        }
        Command::Kernel(KernelCmd::Obstruction(a)) => {
            let k = ctx.kernel(ctx.lift(a)?)?;
            let ob = characteristic_class_seeded(&k, cfg.seed)?;
            ok(report(
                "kernel obstruction",
                json!({
                    "h3_invariants": ob.class.invariants,
                    "coords": ob.class.coords,
                    "zero": ob.class.is_zero(),
                }),
                json!({ "lift": maps_json(k.lift().maps()), "omega": cochain_json(&ob.omega) }),
            ))
        }
        Command::Ext(ExtCmd::Classify { kernel, emit }) => {
            let k = ctx.kernel(ctx.lift(kernel)?)?;
            let cls = classify(&k)?;
            let mut classes = Vec::new();
            let mut omegas = Vec::new();
            for (i, c) in cls.classes.iter().enumerate() {
                let ext = cls.extension(i)?;
                classes.push(json!({
                    "index": i,
                    "coords": c.coords,
                    "total": identify(ext.total()),
                    "split": is_split(&c.fs, cfg.budget)?.is_some(),
                }));
                omegas.push(cochain_json(c.fs.omega()));
                if let Some(dir) = emit {
                    std::fs::create_dir_all(dir)?;
                    std::fs::write(dir.join(format!("class-{i}.ext")), io::write_extension(&c.fs))?;
                }
            }
            ok(report(
                "ext classify",
                json!({
                    "obstructed": cls.is_obstructed(),
                    "chi": cls.obstruction.class.coords,
                    "h2_invariants": cls.h2.as_ref().map(|h| h.invariants().to_vec()),
                    "count": cls.classes.len(),
                    "classes": classes,
                }),
                json!({
                    "lift": maps_json(k.lift().maps()),
                    "base_omega": cls.base.as_ref().map(|b| cochain_json(b.omega())),
                    "class_omegas": omegas,
                }),
            ))
        }
        Command::Ext(ExtCmd::Build { g, n, factor_system }) => {
            let (g, n) = (ctx.group(g)?, ctx.group(n)?);
            let fs = io::parse_factor_for(&io::read(factor_system)?, &g, &n)?;
            let ext = build_extension(&fs)?;
            ok(report(
                "ext build",
                json!({
                    "order": ext.total().order(),
                    "identified": identify(ext.total()),
                    "table": ext.total().table_rows(),
                }),
                json!({ "encoding": "(n, g) -> n + |N| g" }),
            ))
        }
        Command::Ext(ExtCmd::Equiv { e1, e2 }) => {
            let (f1, f2) = (ctx.extension(e1)?, ctx.extension(e2)?);
            for f in [&f1, &f2] {
                if let Some((a, b, c)) = f.first_violation() {
                    return Err(Error::NotACocycle(a, b, c));
                }
            }
            let h = equivalent(&f1, &f2)?;
            ok(report(
                "ext equiv",
                json!({ "equivalent": h.is_some() }),
                json!({ "witness": h.as_ref().map(cochain_json) }),
            ))
        }
        Command::Ext(ExtCmd::Split { e }) => {
            let fs = ctx.extension(e)?;
            if let Some((a, b, c)) = fs.first_violation() {
                return Err(Error::NotACocycle(a, b, c));
            }
            let sp = is_split(&fs, cfg.budget)?;
            ok(report(
                "ext split",
                json!({ "split": sp.is_some() }),
                json!({
                    "h": sp.as_ref().map(|s| cochain_json(&s.h)),
                    "section": sp.as_ref().map(|s| s.section.image.clone()),
                }),
            ))
        }
        Command::Crossmod(CrossmodCmd::Check { file }) => {
            let cm = io::parse_crossmod(&io::read(file)?)?;
            let r = validate_crossed_module(&cm);
            let code = if r.is_valid() { 0 } else { 2 };
            Ok((
                code,
                report(
                    "crossmod check",
                    json!({
                        "valid": r.is_valid(),
                        "checks": r.lines(),
                        "kernel": r.kernel,
                        "image": r.image,
                    }),
                    json!({ "cm1": "alpha(g.h) = g alpha(h) g^-1" }),
                ),
            ))
        }
        Command::Crossmod(CrossmodCmd::Obstruct { file }) => {
            let cm = io::parse_crossmod(&io::read(file)?)?;
            let d = decompose(&cm)?;
            let q = obstruction_q_seeded(&d.data, cfg.seed)?;
            ok(report(
                "crossmod obstruct",
                json!({
                    "quotient": group_json(&q.quotient),
                    "module_invariants": q.module.factors(),
                    "h3_invariants": q.class.invariants,
                    "coords": q.class.coords,
                    "zero": q.class.is_zero(),
                }),
                json!({ "section": q.sigma, "z_embed": d.z_embed, "set_section": d.section }),
            ))
        }
        Command::Crossmod(CrossmodCmd::Enlarge { file }) => {
            let cm = io::parse_crossmod(&io::read(file)?)?;
            let d = decompose(&cm)?;
            let e = enlarge(&d.data)?;
            ok(report(
                "crossmod enlarge",
                json!({
                    "enlarges": e.is_some(),
                    "total": e.as_ref().map(|x| group_json(x.ext.total())),
                }),
                json!({ "f_g": e.as_ref().map(|x| cochain_json(&x.f_g)), "set_section": d.section }),
            ))
        }
        Command::Gs(GsCmd::Build { kernel }) => {
            let k = ctx.kernel(io::parse_kernel(&io::read(kernel)?)?)?;
            let gs = build_gs(&k)?;
            ok(report(
                "gs build",
                json!({
                    "group": group_json(gs.group()),
                    "n_ad": gs.ext.n().order(),
                    "crossed_module_valid": validate_crossed_module(&gs.crossed).is_valid(),
                }),
                json!({ "omega": cochain_json(gs.ext.factor_system().omega()), "s_ad": maps_json(gs.ext.factor_system().lift().maps()) }),
            ))
        }
        Command::Gs(GsCmd::Reduce { ext }) => {
            let fs = ctx.extension(ext)?;
            let e = build_extension(&fs)?;
            let k = ctx.kernel(fs.lift().clone())?;
            let gs = build_gs(&k)?;
            let r = reduce_to_abelian(&e, &gs)?;
            ok(report(
                "gs reduce",
                json!({
                    "gs": group_json(gs.group()),
                    "center": r.ext.n().order(),
                    "total": group_json(r.ext.total()),
                }),
                json!({ "gamma": r.gamma.image, "omega": cochain_json(r.ext.factor_system().omega()) }),
            ))
        }
        Command::Aut(AutCmd::List { ext, brute_force }) => {
            let fs = ctx.extension(ext)?;
            let e = build_extension(&fs)?;
            let auts = aut_preserving(&e, cfg.max_order, cfg.budget)?;
            if *brute_force && aut_preserving_brute_force(&e, cfg.max_order)? != auts {
                return Err(Error::KernelMismatch("brute-force Aut(G^, N) differs".into()));
            }
            let wells = WellsContext::new(&fs)?;
            let comp = compatible_pairs(&fs, cfg.max_order)?;
            let mut liftable = 0;
            for p in &comp {
                if wells.wells_class(p)?.is_zero() {
                    liftable += 1;
                }
            }
            let ker = auts.iter().filter(|a| a.phi.is_identity() && a.psi.is_identity()).count();
            ok(report(
                "aut list",
                json!({
                    "aut_preserving": auts.len(),
                    "kernel_phi": ker,
                    "z1_center": wells.central_cocycles(cfg.budget)?.len(),
                    "comp_s": comp.len(),
                    "liftable_pairs": liftable,
                    "automorphisms": auts.iter().map(|a| json!(a.nu.forward())).collect::<Vec<_>>(),
                }),
                json!({ "brute_force_checked": brute_force }),
            ))
        }
        Command::Aut(AutCmd::Wells { ext, pair }) => {
            let fs = ctx.extension(ext)?;
            let e = build_extension(&fs)?;
            let (phi, psi) = io::parse_pair(&io::read(pair)?, fs.g(), fs.n())?;
            let p = CompatiblePair::new(&phi, &psi, &fs).ok_or(Error::NotCompatible)?;
            let wells = WellsContext::new(&fs)?;
            let class = wells.wells_class(&p)?;
            let lift = wells.lift_pair(&e, &p)?;
            ok(report(
                "aut wells",
                json!({
                    "h2_invariants": class.invariants,
                    "coords": class.coords,
                    "zero": class.is_zero(),
                    "lift": lift.as_ref().map(|a| json!(a.nu.forward())),
                }),
                json!({ "h0": cochain_json(&p.h0) }),
            ))
        }
        Command::Aut(AutCmd::Gauge { ext }) => {
            let fs = ctx.extension(ext)?;
            let e = build_extension(&fs)?;
            let gauge = gauge_group(&e, cfg.max_order, cfg.budget)?;
            ok(report(
                "aut gauge",
                json!({ "order": gauge.order(), "monoid_size": gauge.monoid_size }),
                json!({ "automorphisms": gauge.from_automorphisms.iter().map(|a| json!(a.forward())).collect::<Vec<_>>() }),
            ))
        }
        Command::Aut(AutCmd::Liftaction { ext, h, psi }) => {
            let fs = ctx.extension(ext)?;
            let e = build_extension(&fs)?;
            let hg = ctx.group(h)?;
            let pairs = io::parse_pairs(&io::read(psi)?, fs.g(), fs.n())?;
            let out = lift_group_action(&e, &hg, &pairs, cfg.budget)?;
            let (result, prov) = match out {
                LiftedAction::Lifted { theta, action } => (
                    json!({ "lifted": true, "obstruction": null }),
                    json!({ "theta": theta.iter().map(cochain_json).collect::<Vec<_>>(), "action": maps_json(&action) }),
                ),
                LiftedAction::Obstructed { invariants, coords } => (
                    json!({ "lifted": false, "obstruction": { "invariants": invariants, "coords": coords } }),
                    Value::Null,
                ),
            };
            ok(report("aut liftaction", result, prov))
        }
        Command::Search(SearchCmd::Obstructed { gmax, nmax }) => {
            let mut checked = 0;
            let mut found = Vec::new();
            for gname in catalog_names(*gmax).into_iter().filter(|s| s != "C1") {
                let g = named(&gname)?;
                for nname in catalog_names(*nmax).into_iter().filter(|s| s != "C1") {
                    let n = named(&nname)?;
                    let table = ctx.table(&n)?;
                    for k in all_kernels(&g, &table)? {
                        checked += 1;
                        let ob = characteristic_class_seeded(&k, cfg.seed)?;
                        if !ob.class.is_zero() {
                            found.push(json!({ "g": gname, "n": nname, "classes": k.classes(), "coords": ob.class.coords }));
                        }
                    }
                }
            }
            ok(report(
                "search obstructed",
                json!({ "kernels_checked": checked, "obstructed": found }),
                json!({ "gmax": gmax, "nmax": nmax }),
            ))
        }
    }
}
