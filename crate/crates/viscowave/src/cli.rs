//! Command-line front end: model flags or JSON config in, CSV out.
//!
//! Commands: creep, response, spectrum, wavefront, green, verify, figure.
//! CSV files carry a `name[unit]` header row, values in scientific notation
//! with 17 significant digits, and '#'-prefixed footer comments. Exit codes:
//! 2 for configuration errors, 3 for numerical failures, 4 for I/O failures.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::models::{CreepModel, MediumSpec};
use crate::numerics::verify_duality;
use crate::response::{
    db_per_meter, response_direct, response_spectral, sweep, ResponsePath, Spacing,
};
use crate::spectrum::AttenuationSpectrum;
use crate::wavefront::{front_profile, green_bromwich, green_near_front, jump_amplitude, supports_shock};

#[derive(Parser, Debug)]
#[command(name = "viscowave", version, about = "Attenuation, dispersion and wavefront analysis for creep-compliance viscoelastic media")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Creep compliance J(t) and creep rate over a time grid
    Creep {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Attenuation, dispersion, phase speed and Q over a frequency grid
    Response {
        #[command(flatten)]
        model: ModelArgs,
        /// Lowest angular frequency [rad/s]
        #[arg(long, default_value_t = 1e-2)]
        fmin: f64,
        /// Highest angular frequency [rad/s]
        #[arg(long, default_value_t = 1e2)]
        fmax: f64,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value = "log")]
        spacing: String,
        /// Computational path: direct, spectral, or both
        #[arg(long, default_value = "direct")]
        path: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Spectral density h(r) over a rate grid
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Wavefront profile H(tau, r) at a fixed distance
    Wavefront {
        #[command(flatten)]
        model: ModelArgs,
        /// Propagation distance [m]
        #[arg(long, default_value_t = 1.0)]
        distance: f64,
        /// Largest lag behind the front [s]
        #[arg(long, default_value_t = 1.0)]
        tau_max: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Green's function behind the front at a fixed receiver
    Green {
        #[command(flatten)]
        model: ModelArgs,
        /// Receiver position [m]
        #[arg(long, default_value_t = 1.0)]
        x: f64,
        /// Largest lag behind the front [s]
        #[arg(long, default_value_t = 1.0)]
        tau_max: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Also emit the full Bromwich inversion column
        #[arg(long)]
        bromwich: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite and report residuals
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        /// Suite: duality or crosspath
        #[arg(long, default_value = "duality")]
        suite: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reproduce a figure preset: fig1, fig2, fig3 or fig4
    Figure {
        /// Preset name
        name: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// JSON config file; its fields override the flags below
    #[arg(long)]
    config: Option<PathBuf>,
    /// Family: strick-mainardi (alias strick, sm), becker, jls, andrade
    #[arg(long, default_value = "strick-mainardi")]
    model: String,
    #[arg(long, default_value_t = 1.0)]
    j0: f64,
    #[arg(long, default_value_t = 1.0)]
    m0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    j1: f64,
    #[arg(long, default_value_t = 1.0)]
    j2: f64,
    /// Density [kg/m^3]; defaults to 1/J0, making c0 = 1
    #[arg(long)]
    rho: Option<f64>,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long, default_value_t = 1e-2, allow_negative_numbers = true)]
    min: f64,
    #[arg(long, default_value_t = 1e2, allow_negative_numbers = true)]
    max: f64,
    #[arg(long, default_value_t = 200)]
    points: usize,
    /// log or linear
    #[arg(long, default_value = "log")]
    spacing: String,
}

/// JSON config: the serialized model object plus optional density and output.
#[derive(Deserialize)]
struct ConfigFile {
    #[serde(flatten)]
    model: CreepModel,
    rho: Option<f64>,
    output: Option<PathBuf>,
}

impl ModelArgs {
    /// Resolved medium plus the config file's output override, if any.
    fn resolve(&self) -> Result<(MediumSpec, Option<PathBuf>)> {
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path)?;
            let cfg: ConfigFile = serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            let rho = cfg.rho.unwrap_or(1.0 / cfg.model.j0());
            return Ok((MediumSpec::new(cfg.model, rho)?, cfg.output));
        }
        let model = match self.model.as_str() {
            "strick-mainardi" | "strick" | "sm" => {
                CreepModel::strick_mainardi(self.j0, self.m0, self.alpha, self.omega)?
            }
            "becker" => CreepModel::becker(self.j0, self.m0, self.omega)?,
            "jls" => CreepModel::jls(self.j0, self.m0, self.alpha, self.omega)?,
            "andrade" => CreepModel::andrade(self.j0, self.j1, self.j2, self.alpha)?,
            other => {
                return Err(Error::Config(format!(
                    "unknown model family '{other}' (expected strick-mainardi, becker, jls or andrade)"
                )))
            }
        };
        let rho = self.rho.unwrap_or(1.0 / self.j0);
        Ok((MediumSpec::new(model, rho)?, None))
    }
}

fn parse_spacing(s: &str) -> Result<Spacing> {
    match s {
        "log" => Ok(Spacing::Log),
        "linear" => Ok(Spacing::Linear),
        other => Err(Error::Config(format!("spacing must be log or linear, got '{other}'"))),
    }
}

fn grid(min: f64, max: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(min < max) || points < 2 {
        return Err(Error::Config(format!(
            "grid needs min < max and points >= 2, got [{min}, {max}] with {points} points"
        )));
    }
    if spacing == Spacing::Log && min <= 0.0 {
        return Err(Error::Config(format!("log spacing needs min > 0, got {min}")));
    }
    Ok((0..points)
        .map(|i| {
            let s = i as f64 / (points - 1) as f64;
            match spacing {
                Spacing::Log => min * (max / min).powf(s),
                Spacing::Linear => min + s * (max - min),
            }
        })
        .collect())
}

/// Global tolerance override; used by verify suites and --path both.
fn global_tol(default: f64) -> Result<f64> {
    match std::env::var("VISCOWAVE_TOL") {
        Ok(s) => s
            .parse::<f64>()
            .ok()
            .filter(|t| *t > 0.0)
            .ok_or_else(|| Error::Config(format!("VISCOWAVE_TOL must be a positive number, got '{s}'"))),
        Err(_) => Ok(default),
    }
}

struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
    footers: Vec<String>,
}

impl Csv {
    fn new(header: &[&str]) -> Self {
        Csv {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            footers: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn footer(&mut self, line: String) {
        self.footers.push(line);
    }

    fn write(&self, output: Option<&Path>) -> Result<()> {
        let mut buf = String::new();
        buf.push_str(&self.header.join(","));
        buf.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            buf.push_str(&cells.join(","));
            buf.push('\n');
        }
        for line in &self.footers {
            buf.push_str("# ");
            buf.push_str(line);
            buf.push('\n');
        }
        match output {
            Some(path) => fs::write(path, buf)?,
            None => std::io::stdout().write_all(buf.as_bytes())?,
        }
        Ok(())
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Creep { model, grid: g, output } => {
            let (medium, cfg_out) = model.resolve()?;
            let ts = grid(g.min, g.max, g.points, parse_spacing(&g.spacing)?)?;
            let mut csv = Csv::new(&["t[s]", "J[1/Pa]", "dJdt[1/(Pa s)]"]);
            for &t in &ts {
                let j = medium.model().creep_value(t)?;
                let rate = medium.model().creep_rate(t)?;
                csv.push(vec![t, j, rate]);
            }
            csv.footer(format!("family = {}", medium.model().family_name()));
            csv.write(cfg_out.or(output).as_deref())
        }
        Command::Response { model, fmin, fmax, points, spacing, path, output } => {
            let (medium, cfg_out) = model.resolve()?;
            let spacing = parse_spacing(&spacing)?;
            let out = cfg_out.or(output);
            match path.as_str() {
                "direct" | "spectral" => {
                    let p = if path == "direct" { ResponsePath::Direct } else { ResponsePath::Spectral };
                    let rows = sweep(&medium, fmin, fmax, points, spacing, p)?;
                    let mut csv = Csv::new(&[
                        "omega[rad/s]",
                        "A[1/m]",
                        "A[dB/m]",
                        "D[1/m]",
                        "c[m/s]",
                        "Q[-]",
                    ]);
                    for r in rows {
                        csv.push(vec![
                            r.omega,
                            r.attenuation,
                            db_per_meter(r.attenuation),
                            r.dispersion,
                            r.phase_speed,
                            r.q_factor,
                        ]);
                    }
                    csv.footer(format!("path = {path}"));
                    csv.write(out.as_deref())
                }
                "both" => {
                    let tol = global_tol(1e-5)?;
                    let direct = sweep(&medium, fmin, fmax, points, spacing, ResponsePath::Direct)?;
                    let spectral = sweep(&medium, fmin, fmax, points, spacing, ResponsePath::Spectral)?;
                    let mut csv = Csv::new(&[
                        "omega[rad/s]",
                        "A_direct[1/m]",
                        "D_direct[1/m]",
                        "c_direct[m/s]",
                        "Q_direct[-]",
                        "A_spectral[1/m]",
                        "D_spectral[1/m]",
                        "c_spectral[m/s]",
                        "Q_spectral[-]",
                    ]);
                    let mut max_rel = 0.0f64;
                    for (d, s) in direct.iter().zip(&spectral) {
                        let rel_a = (d.attenuation - s.attenuation).abs() / d.attenuation.abs().max(f64::MIN_POSITIVE);
                        let rel_d = (d.dispersion - s.dispersion).abs() / d.dispersion.abs().max(f64::MIN_POSITIVE);
                        max_rel = max_rel.max(rel_a).max(rel_d);
                        csv.push(vec![
                            d.omega,
                            d.attenuation,
                            d.dispersion,
                            d.phase_speed,
                            d.q_factor,
                            s.attenuation,
                            s.dispersion,
                            s.phase_speed,
                            s.q_factor,
                        ]);
                    }
                    csv.footer(format!("max relative path discrepancy = {max_rel:.3e}"));
                    csv.write(out.as_deref())?;
                    if max_rel > tol {
                        return Err(Error::Convergence(format!(
                            "path discrepancy {max_rel:.3e} exceeds tolerance {tol:.3e}"
                        )));
                    }
                    Ok(())
                }
                other => Err(Error::Config(format!(
                    "path must be direct, spectral or both, got '{other}'"
                ))),
            }
        }
        Command::Spectrum { model, grid: g, output } => {
            let (medium, cfg_out) = model.resolve()?;
            let rs = grid(g.min, g.max, g.points, parse_spacing(&g.spacing)?)?;
            let spectrum = AttenuationSpectrum::new(medium)?;
            let mut csv = Csv::new(&["r[1/s]", "h[s/m]"]);
            for &r in &rs {
                csv.push(vec![r, spectrum.density(r)?]);
            }
            csv.footer(format!("N[1/m] = {:.16e}", spectrum.total_mass));
            csv.footer(format!("support_sup[1/s] = {:.16e}", spectrum.support_sup));
            csv.write(cfg_out.or(output).as_deref())
        }
        Command::Wavefront { model, distance, tau_max, points, output } => {
            let (medium, cfg_out) = model.resolve()?;
            let taus = grid(0.0, tau_max, points, Spacing::Linear)?;
            let profile = front_profile(&medium, distance, &taus)?;
            let mut csv = Csv::new(&["tau[s]", "H[-]", "G[m^3/kg]"]);
            for i in 0..taus.len() {
                csv.push(vec![taus[i], profile.h_values[i], profile.green_values[i]]);
            }
            csv.footer(format!("distance[m] = {distance:.16e}"));
            csv.footer(format!("arrival_time[s] = {:.16e}", profile.arrival_time));
            csv.footer(format!("jump[m^3/kg] = {:.16e}", profile.jump));
            csv.write(cfg_out.or(output).as_deref())
        }
        Command::Green { model, x, tau_max, points, bromwich, output } => {
            let (medium, cfg_out) = model.resolve()?;
            let arrival = x.abs() / medium.front_speed();
            let margin = 1e-3 * arrival.max(f64::MIN_POSITIVE);
            let taus = grid(0.0, tau_max, points, Spacing::Linear)?;
            let mut header = vec!["t[s]", "tau[s]", "G_near[m^3/kg]"];
            if bromwich {
                header.push("G_bromwich[m^3/kg]");
            }
            let mut csv = Csv::new(&header);
            for &tau in &taus {
                let t = arrival + tau;
                let mut row = vec![t, tau, green_near_front(&medium, t, x)?];
                if bromwich {
                    // the inversion is ill-conditioned at the front itself
                    row.push(if tau >= margin {
                        green_bromwich(&medium, t, x, margin)?
                    } else {
                        f64::NAN
                    });
                }
                csv.push(row);
            }
            csv.footer(format!("arrival_time[s] = {arrival:.16e}"));
            if supports_shock(&medium) {
                csv.footer(format!("jump[m^3/kg] = {:.16e}", jump_amplitude(&medium, x.abs())?));
            } else {
                csv.footer("jump[m^3/kg] = 0 (smooth wavefront)".to_string());
            }
            csv.write(cfg_out.or(output).as_deref())
        }
        Command::Verify { model, suite, output } => {
            let (medium, cfg_out) = model.resolve()?;
            match suite.as_str() {
                "duality" => {
                    let tol = global_tol(1e-5)?;
                    let omega = medium.model().timescale();
                    let ts: Vec<f64> = [0.1, 1.0, 10.0].iter().map(|t| t / omega).collect();
                    let report = verify_duality(medium.model(), &ts)?;
                    let mut csv = Csv::new(&["t[s]", "relative_residual[-]"]);
                    for &(t, r) in &report.residuals {
                        csv.push(vec![t, r]);
                    }
                    csv.footer(format!("max relative residual = {:.3e}", report.max_relative_residual));
                    csv.footer(format!("tolerance = {tol:.3e}"));
                    csv.write(cfg_out.or(output).as_deref())?;
                    if report.max_relative_residual > tol {
                        return Err(Error::Convergence(format!(
                            "duality residual {:.3e} exceeds tolerance {tol:.3e}",
                            report.max_relative_residual
                        )));
                    }
                    Ok(())
                }
                "crosspath" => {
                    let tol = global_tol(1e-5)?;
                    let omega = medium.model().timescale();
                    let mut csv = Csv::new(&["omega[rad/s]", "rel_discrepancy_A[-]", "rel_discrepancy_D[-]"]);
                    let mut max_rel = 0.0f64;
                    for &w in grid(1e-2 * omega, 1e2 * omega, 20, Spacing::Log)?.iter() {
                        let d = response_direct(&medium, w)?;
                        let s = response_spectral(&medium, w)?;
                        let rel_a = (d.attenuation - s.attenuation).abs() / d.attenuation.abs().max(f64::MIN_POSITIVE);
                        let rel_d = (d.dispersion - s.dispersion).abs() / d.dispersion.abs().max(f64::MIN_POSITIVE);
                        max_rel = max_rel.max(rel_a).max(rel_d);
                        csv.push(vec![w, rel_a, rel_d]);
                    }
                    csv.footer(format!("max relative discrepancy = {max_rel:.3e}"));
                    csv.footer(format!("tolerance = {tol:.3e}"));
                    csv.write(cfg_out.or(output).as_deref())?;
                    if max_rel > tol {
                        return Err(Error::Convergence(format!(
                            "cross-path discrepancy {max_rel:.3e} exceeds tolerance {tol:.3e}"
                        )));
                    }
                    Ok(())
                }
                other => Err(Error::Config(format!(
                    "unknown suite '{other}' (expected duality or crosspath)"
                ))),
            }
        }
        Command::Figure { name, output } => figure(&name, output),
    }
}

/// Figure presets. Quantities the
/// reference figures leave open are documented in footer comments.
fn figure(name: &str, output: Option<PathBuf>) -> Result<()> {
    let out = output.unwrap_or_else(|| PathBuf::from(format!("{name}.csv")));
    match name {
        "fig1" => {
            // J0 = 4.1e-11 1/Pa, M0 = 16e-11/(pi 50) 1/Pa, Omega = 1
            let j0 = 4.1e-11;
            let m0 = 16e-11 / (std::f64::consts::PI * 50.0);
            let alphas = [-0.5, 0.0, 0.5];
            let models: Vec<CreepModel> = alphas
                .iter()
                .map(|&a| CreepModel::strick_mainardi(j0, m0, a, 1.0))
                .collect::<Result<_>>()?;
            let mut csv = Csv::new(&[
                "t[s]",
                "J_alpha=-0.5[1/Pa]",
                "J_alpha=0[1/Pa]",
                "J_alpha=0.5[1/Pa]",
            ]);
            for &t in &grid(1e-3, 1e3, 241, Spacing::Log)? {
                let mut row = vec![t];
                for m in &models {
                    row.push(m.creep_value(t)?);
                }
                csv.push(row);
            }
            csv.footer("Strick-Mainardi creep compliance, Omega = 1 rad/s".to_string());
            csv.write(Some(&out))
        }
        "fig2" => {
            // the reference "M0 = 0.026" is unitless next to J0 in 1/Pa; both
            // readings are emitted: the ratio M0 = 0.026 J0 (which yields
            // Q ~ 50 mid-band) and the literal M0 = 0.026 1/Pa
            let j0 = 4.1e-11;
            let c0 = 2851.0;
            let rho = 1.0 / (c0 * c0 * j0);
            let mut media = Vec::new();
            for &(m0, tag) in &[(0.026 * j0, "ratio"), (0.026, "abs")] {
                for &a in &[0.3, -0.3] {
                    let model = CreepModel::strick_mainardi(j0, m0, a, 1.0)?;
                    media.push((MediumSpec::new(model, rho)?, format!("A_{tag}_alpha={a}[dB/m]")));
                }
            }
            let header: Vec<&str> = std::iter::once("omega[rad/s]")
                .chain(media.iter().map(|(_, h)| h.as_str()))
                .collect();
            let mut csv = Csv::new(&header);
            for &w in &grid(1e-2, 1e2, 101, Spacing::Log)? {
                let mut row = vec![w];
                for (medium, _) in &media {
                    row.push(db_per_meter(response_direct(medium, w)?.attenuation));
                }
                csv.push(row);
            }
            csv.footer("ratio columns read M0 = 0.026 J0; abs columns read M0 = 0.026 1/Pa".to_string());
            csv.footer(format!("rho[kg/m^3] = {rho:.16e} (from c0 = 2851 m/s)"));
            csv.write(Some(&out))
        }
        "fig3" => {
            // near-wavefront profiles: J0 = 1, M0 = Omega = 1, c0 = 1 km/s
            let c0 = 1000.0;
            let rho = 1.0 / (c0 * c0);
            let mut columns: Vec<(MediumSpec, f64, String)> = Vec::new();
            for &alpha in &[0.5, -0.5] {
                for &r_km in &[1.0, 2.0, 5.0] {
                    let model = CreepModel::strick_mainardi(1.0, 1.0, alpha, 1.0)?;
                    let medium = MediumSpec::new(model, rho)?;
                    columns.push((medium, r_km * 1000.0, format!("alpha={alpha}_r={r_km}km")));
                }
            }
            // panel (c) alpha sweep at r = 5 km; values beyond +-0.5 are an
            // extrapolation past the reference parameter set
            for &alpha in &[-0.75, 0.0, 0.75] {
                let model = CreepModel::strick_mainardi(1.0, 1.0, alpha, 1.0)?;
                let medium = MediumSpec::new(model, rho)?;
                columns.push((medium, 5000.0, format!("alpha={alpha}_r=5km_extrapolation")));
            }
            let taus = grid(0.0, 0.5, 51, Spacing::Linear)?;
            let header_strings: Vec<String> = std::iter::once("tau[s]".to_string())
                .chain(columns.iter().flat_map(|(_, _, tag)| {
                    [format!("H_{tag}[-]"), format!("G_{tag}[m^3/kg]")]
                }))
                .collect();
            let header: Vec<&str> = header_strings.iter().map(|s| s.as_str()).collect();
            let mut csv = Csv::new(&header);
            let mut profiles = Vec::new();
            for (medium, distance, _) in &columns {
                profiles.push(front_profile(medium, *distance, &taus)?);
            }
            for (i, &tau) in taus.iter().enumerate() {
                let mut row = vec![tau];
                for profile in &profiles {
                    row.push(profile.h_values[i]);
                    row.push(profile.green_values[i]);
                }
                csv.push(row);
            }
            csv.footer("H columns are 2 rho G, dimensionless in [0, 1]".to_string());
            csv.footer(format!("rho[kg/m^3] = {rho:.16e} (from c0 = 1 km/s, J0 = 1 1/Pa)"));
            csv.write(Some(&out))
        }
        "fig4" => {
            // JLS attenuation: J0 = M0 = Omega = 1, rho = 1
            let alphas = [0.8, 0.0, -0.8];
            let media: Vec<MediumSpec> = alphas
                .iter()
                .map(|&a| MediumSpec::new(CreepModel::jls(1.0, 1.0, a, 1.0)?, 1.0))
                .collect::<Result<_>>()?;
            let mut csv = Csv::new(&[
                "omega[rad/s]",
                "A_alpha=0.8[1/m]",
                "A_alpha=0[1/m]",
                "A_alpha=-0.8[1/m]",
            ]);
            for &w in &grid(1e-2, 1e4, 121, Spacing::Log)? {
                let mut row = vec![w];
                for medium in &media {
                    row.push(response_direct(medium, w)?.attenuation);
                }
                csv.push(row);
            }
            csv.footer("all three curves saturate at N = 0.5 1/m".to_string());
            csv.write(Some(&out))
        }
        other => Err(Error::Config(format!(
            "unknown figure preset '{other}' (expected fig1, fig2, fig3 or fig4)"
        ))),
    }
}
