//! Sectioned key=value run configuration: parsing, validation, canonical
//! emission, and construction of a solver setup.
//!
//! Sections and keys are a fixed contract; unknown keys are errors so a
//! misspelling can never silently fall back to a default.

use std::collections::BTreeMap;
use std::fmt;

use fatiguefield::sweep::RunSetup;
use fatiguefield::{
    initial_state, stable_dt, Grid1D, LoadProgram, LoadShape, MaterialParams, PhaseScheme,
    StepControls, ThermalParams,
};

/// A parse or validation problem, tagged with its `section.key` location.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DtSpec {
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeSpec {
    Explicit,
    SemiImplicit,
}

#[derive(Debug, Clone, PartialEq)]
pub enum U0Kind {
    Zero,
    HalfSine { amplitude: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThermalConfig {
    pub c: f64,
    pub k_q: f64,
    pub varkappa: f64,
    pub theta_ref: f64,
}

/// Fully validated run configuration (uniform material fields; heterogeneous
/// fields are a library-level feature).
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub grid_l: f64,
    pub n_cells: usize,
    pub rho: f64,
    pub kappa: f64,
    pub f0: f64,
    pub a: f64,
    pub thermal: Option<ThermalConfig>,
    pub amplitude: f64,
    pub omega: f64,
    pub shape: LoadShape,
    pub dt: DtSpec,
    pub t_end: f64,
    pub phase_scheme: SchemeSpec,
    pub sample_every: usize,
    pub cfl_safety: f64,
    pub u0_kind: U0Kind,
    pub phi0_const: f64,
    pub theta0_const: Option<f64>,
    pub trajectory_path: String,
    pub fields_path: Option<String>,
    pub probe_node: usize,
}

const SECTIONS: [&str; 6] = ["grid", "material", "load", "controls", "initial", "outputs"];

fn known_keys(section: &str) -> &'static [&'static str] {
    match section {
        "grid" => &["L", "n_cells"],
        "material" => &["rho", "kappa", "F0", "a", "c", "k_q", "varkappa", "theta_ref"],
        "load" => &["amplitude", "omega", "shape"],
        "controls" => &["dt", "t_end", "phase_scheme", "sample_every", "cfl_safety"],
        "initial" => &["u0_kind", "phi0_const", "theta0_const"],
        "outputs" => &["trajectory_path", "fields_path", "probe_node"],
        _ => &[],
    }
}

type RawMap = BTreeMap<(String, String), String>;

fn parse_raw(text: &str, errors: &mut Vec<ConfigError>) -> RawMap {
    let mut map = RawMap::new();
    let mut section: Option<String> = None;
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = name.trim();
            if SECTIONS.contains(&name) {
                section = Some(name.to_string());
            } else {
                errors.push(ConfigError {
                    location: format!("line {}", lineno + 1),
                    message: format!("unknown section [{name}]"),
                });
                section = None;
            }
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            errors.push(ConfigError {
                location: format!("line {}", lineno + 1),
                message: format!("expected `key = value`, got `{line}`"),
            });
            continue;
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        let Some(section) = &section else {
            errors.push(ConfigError {
                location: format!("line {}", lineno + 1),
                message: format!("key `{key}` appears before any [section]"),
            });
            continue;
        };
        if !known_keys(section).contains(&key.as_str()) {
            errors.push(ConfigError {
                location: format!("{section}.{key}"),
                message: "unknown key".into(),
            });
            continue;
        }
        if map
            .insert((section.clone(), key.clone()), value)
            .is_some()
        {
            errors.push(ConfigError {
                location: format!("{section}.{key}"),
                message: "duplicate key".into(),
            });
        }
    }
    map
}

struct Extractor<'a> {
    map: &'a mut RawMap,
    errors: &'a mut Vec<ConfigError>,
}

impl<'a> Extractor<'a> {
    fn take(&mut self, section: &str, key: &str) -> Option<String> {
        self.map.remove(&(section.to_string(), key.to_string()))
    }

    fn required(&mut self, section: &str, key: &str) -> Option<String> {
        let v = self.take(section, key);
        if v.is_none() {
            self.errors.push(ConfigError {
                location: format!("{section}.{key}"),
                message: "missing required key".into(),
            });
        }
        v
    }

    fn err(&mut self, section: &str, key: &str, message: impl Into<String>) {
        self.errors.push(ConfigError {
            location: format!("{section}.{key}"),
            message: message.into(),
        });
    }

    fn float(&mut self, section: &str, key: &str, raw: &str) -> Option<f64> {
        match raw.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => {
                self.err(section, key, format!("expected a finite number, got `{raw}`"));
                None
            }
        }
    }

    fn required_float(&mut self, section: &str, key: &str) -> Option<f64> {
        let raw = self.required(section, key)?;
        self.float(section, key, &raw)
    }

    fn optional_float(&mut self, section: &str, key: &str) -> Option<Option<f64>> {
        match self.take(section, key) {
            None => Some(None),
            Some(raw) => self.float(section, key, &raw).map(Some),
        }
    }

    fn required_usize(&mut self, section: &str, key: &str) -> Option<usize> {
        let raw = self.required(section, key)?;
        match raw.parse::<usize>() {
            Ok(v) => Some(v),
            Err(_) => {
                self.err(section, key, format!("expected a nonnegative integer, got `{raw}`"));
                None
            }
        }
    }
}

fn parse_shape(raw: &str) -> Result<LoadShape, String> {
    if raw == "uniform" {
        return Ok(LoadShape::Uniform);
    }
    if raw == "half_sine" {
        return Ok(LoadShape::HalfSine);
    }
    if let Some(rest) = raw.strip_prefix("gaussian:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() == 2 {
            let center = parts[0].parse::<f64>().map_err(|_| "bad gaussian center")?;
            let width = parts[1].parse::<f64>().map_err(|_| "bad gaussian width")?;
            if !(width.is_finite() && width > 0.0) {
                return Err("gaussian width must be > 0".into());
            }
            if !center.is_finite() {
                return Err("gaussian center must be finite".into());
            }
            return Ok(LoadShape::Gaussian { center, width });
        }
    }
    Err(format!(
        "expected uniform | half_sine | gaussian:<center>:<width>, got `{raw}`"
    ))
}

fn shape_to_string(shape: &LoadShape) -> String {
    match shape {
        LoadShape::Uniform => "uniform".into(),
        LoadShape::HalfSine => "half_sine".into(),
        LoadShape::Gaussian { center, width } => format!("gaussian:{center}:{width}"),
    }
}

fn parse_u0(raw: &str) -> Result<U0Kind, String> {
    if raw == "zero" {
        return Ok(U0Kind::Zero);
    }
    if let Some(rest) = raw.strip_prefix("half_sine:") {
        let amplitude = rest.parse::<f64>().map_err(|_| "bad half_sine amplitude")?;
        if !amplitude.is_finite() {
            return Err("half_sine amplitude must be finite".into());
        }
        return Ok(U0Kind::HalfSine { amplitude });
    }
    Err(format!("expected zero | half_sine:<amplitude>, got `{raw}`"))
}

fn u0_to_string(kind: &U0Kind) -> String {
    match kind {
        U0Kind::Zero => "zero".into(),
        U0Kind::HalfSine { amplitude } => format!("half_sine:{amplitude}"),
    }
}

/// Parse and fully validate a configuration. All problems are reported at
/// once, each with its `section.key` location.
pub fn parse_config(text: &str) -> Result<RunConfig, Vec<ConfigError>> {
    let mut errors = Vec::new();
    let mut map = parse_raw(text, &mut errors);
    let present = |map: &RawMap, key: &str| map.contains_key(&("material".into(), key.into()));
    let thermal_keys_present = ["c", "k_q", "varkappa", "theta_ref"]
        .iter()
        .filter(|k| present(&map, k))
        .count();
    let theta0_present = map.contains_key(&("initial".into(), "theta0_const".into()));
    let mut ex = Extractor {
        map: &mut map,
        errors: &mut errors,
    };

    let grid_l = ex.required_float("grid", "L");
    let n_cells = ex.required_usize("grid", "n_cells");
    let rho = ex.required_float("material", "rho");
    let kappa = ex.required_float("material", "kappa");
    let f0 = ex.required_float("material", "F0");
    let a = ex.required_float("material", "a");
    let c = ex.optional_float("material", "c");
    let k_q = ex.optional_float("material", "k_q");
    let varkappa = ex.optional_float("material", "varkappa");
    let theta_ref = ex.optional_float("material", "theta_ref");
    let amplitude = ex.required_float("load", "amplitude");
    let omega = ex.required_float("load", "omega");
    let shape_raw = ex.required("load", "shape");
    let dt_raw = ex.required("controls", "dt");
    let t_end = ex.required_float("controls", "t_end");
    let scheme_raw = ex.required("controls", "phase_scheme");
    let sample_every = ex.required_usize("controls", "sample_every");
    let cfl_raw = ex.optional_float("controls", "cfl_safety");
    let u0_raw = ex.required("initial", "u0_kind");
    let phi0_const = ex.required_float("initial", "phi0_const");
    let theta0_const = ex.optional_float("initial", "theta0_const");
    let trajectory_path = ex.required("outputs", "trajectory_path");
    let fields_raw = ex.take("outputs", "fields_path");
    let probe_node = ex.required_usize("outputs", "probe_node");

    let shape = shape_raw.and_then(|raw| match parse_shape(&raw) {
        Ok(s) => Some(s),
        Err(m) => {
            ex.err("load", "shape", m);
            None
        }
    });
    let dt = dt_raw.and_then(|raw| {
        if raw == "auto" {
            Some(DtSpec::Auto)
        } else {
            ex.float("controls", "dt", &raw).and_then(|v| {
                if v > 0.0 {
                    Some(DtSpec::Fixed(v))
                } else {
                    ex.err("controls", "dt", "dt must be > 0 or `auto`");
                    None
                }
            })
        }
    });
    let phase_scheme = scheme_raw.and_then(|raw| match raw.as_str() {
        "explicit" => Some(SchemeSpec::Explicit),
        "semi_implicit" => Some(SchemeSpec::SemiImplicit),
        _ => {
            ex.err(
                "controls",
                "phase_scheme",
                format!("expected explicit | semi_implicit, got `{raw}`"),
            );
            None
        }
    });
    let u0_kind = u0_raw.and_then(|raw| match parse_u0(&raw) {
        Ok(k) => Some(k),
        Err(m) => {
            ex.err("initial", "u0_kind", m);
            None
        }
    });

    // semantic validation
    if let Some(v) = grid_l {
        if v <= 0.0 {
            ex.err("grid", "L", "L must be > 0");
        }
    }
    if let Some(v) = n_cells {
        if v < 4 {
            ex.err("grid", "n_cells", "n_cells must be >= 4");
        }
    }
    for (key, v) in [("rho", rho), ("kappa", kappa), ("a", a)] {
        if let Some(v) = v {
            if v <= 0.0 {
                ex.err("material", key, format!("{key} must be > 0"));
            }
        }
    }
    if let Some(v) = f0 {
        if v < 0.0 {
            ex.err("material", "F0", "F0 must be >= 0");
        }
    }
    if let Some(v) = omega {
        if v < 0.0 {
            ex.err("load", "omega", "omega must be >= 0");
        }
    }
    if let Some(v) = t_end {
        if v < 0.0 {
            ex.err("controls", "t_end", "t_end must be >= 0");
        }
    }
    if let Some(v) = sample_every {
        if v == 0 {
            ex.err("controls", "sample_every", "sample_every must be >= 1");
        }
    }
    let cfl_safety = match cfl_raw {
        Some(Some(v)) => {
            if !(v > 0.0 && v <= 1.0) {
                ex.err("controls", "cfl_safety", "cfl_safety must lie in (0, 1]");
            }
            v
        }
        _ => 0.5,
    };
    if let Some(v) = phi0_const {
        if !(0.0..=1.0).contains(&v) {
            ex.err(
                "initial",
                "phi0_const",
                format!("phi0_const must lie in the admissible range [0, 1], got {v}"),
            );
        }
    }

    // thermal block: all four keys or none
    let thermal = if thermal_keys_present == 0 {
        None
    } else if let (Some(Some(c)), Some(Some(k_q)), Some(Some(varkappa)), Some(Some(theta_ref))) =
        (c, k_q, varkappa, theta_ref)
    {
        if c <= 0.0 {
            ex.err("material", "c", "c must be > 0");
        }
        if k_q < 0.0 {
            ex.err("material", "k_q", "k_q must be >= 0");
        }
        if varkappa <= 0.0 {
            ex.err("material", "varkappa", "varkappa must be > 0");
        }
        if theta_ref <= 0.0 {
            ex.err("material", "theta_ref", "theta_ref must be > 0");
        }
        Some(ThermalConfig {
            c,
            k_q,
            varkappa,
            theta_ref,
        })
    } else {
        ex.err(
            "material",
            "c",
            "thermal mode needs all of c, k_q, varkappa, theta_ref",
        );
        None
    };

    // resolved initial temperature (defaults to theta_ref)
    let theta0_const = match (theta0_present, theta0_const, &thermal) {
        (true, Some(Some(v)), Some(_)) => {
            if v <= 0.0 {
                ex.err("initial", "theta0_const", "theta0_const must be > 0");
            }
            Some(v)
        }
        (true, Some(Some(_)), None) => {
            ex.err(
                "initial",
                "theta0_const",
                "theta0_const requires the material thermal block",
            );
            None
        }
        (false, _, Some(t)) => Some(t.theta_ref),
        _ => None,
    };

    if let (Some(p), Some(n)) = (probe_node, n_cells) {
        if p > n {
            ex.err(
                "outputs",
                "probe_node",
                format!("probe_node must be <= n_cells = {n}"),
            );
        }
    }
    let fields_path = match fields_raw {
        None => None,
        Some(raw) if raw == "none" => None,
        Some(raw) => Some(raw),
    };

    // extraction above is exhaustive over the known keys
    debug_assert!(ex.map.is_empty());

    if !errors.is_empty() {
        return Err(errors);
    }

    Ok(RunConfig {
        grid_l: grid_l.unwrap(),
        n_cells: n_cells.unwrap(),
        rho: rho.unwrap(),
        kappa: kappa.unwrap(),
        f0: f0.unwrap(),
        a: a.unwrap(),
        thermal,
        amplitude: amplitude.unwrap(),
        omega: omega.unwrap(),
        shape: shape.unwrap(),
        dt: dt.unwrap(),
        t_end: t_end.unwrap(),
        phase_scheme: phase_scheme.unwrap(),
        sample_every: sample_every.unwrap(),
        cfl_safety,
        u0_kind: u0_kind.unwrap(),
        phi0_const: phi0_const.unwrap(),
        theta0_const,
        trajectory_path: trajectory_path.unwrap(),
        fields_path,
        probe_node: probe_node.unwrap(),
    })
}

impl RunConfig {
    /// Canonical text form: parsing it reproduces this config exactly.
    pub fn to_canonical_string(&self) -> String {
        let mut s = String::new();
        s.push_str("[grid]\n");
        s.push_str(&format!("L = {}\n", self.grid_l));
        s.push_str(&format!("n_cells = {}\n", self.n_cells));
        s.push_str("[material]\n");
        s.push_str(&format!("rho = {}\n", self.rho));
        s.push_str(&format!("kappa = {}\n", self.kappa));
        s.push_str(&format!("F0 = {}\n", self.f0));
        s.push_str(&format!("a = {}\n", self.a));
        if let Some(t) = &self.thermal {
            s.push_str(&format!("c = {}\n", t.c));
            s.push_str(&format!("k_q = {}\n", t.k_q));
            s.push_str(&format!("varkappa = {}\n", t.varkappa));
            s.push_str(&format!("theta_ref = {}\n", t.theta_ref));
        }
        s.push_str("[load]\n");
        s.push_str(&format!("amplitude = {}\n", self.amplitude));
        s.push_str(&format!("omega = {}\n", self.omega));
        s.push_str(&format!("shape = {}\n", shape_to_string(&self.shape)));
        s.push_str("[controls]\n");
        match self.dt {
            DtSpec::Auto => s.push_str("dt = auto\n"),
            DtSpec::Fixed(v) => s.push_str(&format!("dt = {v}\n")),
        }
        s.push_str(&format!("t_end = {}\n", self.t_end));
        s.push_str(&format!(
            "phase_scheme = {}\n",
            match self.phase_scheme {
                SchemeSpec::Explicit => "explicit",
                SchemeSpec::SemiImplicit => "semi_implicit",
            }
        ));
        s.push_str(&format!("sample_every = {}\n", self.sample_every));
        s.push_str(&format!("cfl_safety = {}\n", self.cfl_safety));
        s.push_str("[initial]\n");
        s.push_str(&format!("u0_kind = {}\n", u0_to_string(&self.u0_kind)));
        s.push_str(&format!("phi0_const = {}\n", self.phi0_const));
        if let Some(v) = self.theta0_const {
            s.push_str(&format!("theta0_const = {v}\n"));
        }
        s.push_str("[outputs]\n");
        s.push_str(&format!("trajectory_path = {}\n", self.trajectory_path));
        s.push_str(&format!(
            "fields_path = {}\n",
            self.fields_path.as_deref().unwrap_or("none")
        ));
        s.push_str(&format!("probe_node = {}\n", self.probe_node));
        s
    }

    /// Resolved time step: `auto` means stable_dt * cfl_safety.
    pub fn resolve_dt(&self, params: &MaterialParams, grid: &Grid1D) -> f64 {
        match self.dt {
            DtSpec::Fixed(v) => v,
            DtSpec::Auto => stable_dt(params, grid) * self.cfl_safety,
        }
    }

    /// Build the solver setup this config describes.
    pub fn build(&self) -> Result<RunSetup, Vec<ConfigError>> {
        let mk = |location: &str, message: String| {
            vec![ConfigError {
                location: location.into(),
                message,
            }]
        };
        let grid = Grid1D::new(self.grid_l, self.n_cells)
            .map_err(|e| mk("grid", e.to_string()))?;
        let mut params = MaterialParams::uniform(&grid, self.rho, self.kappa, self.f0, self.a);
        if let Some(t) = &self.thermal {
            params.thermal = Some(ThermalParams {
                c: t.c,
                k_q: t.k_q,
                varkappa: t.varkappa,
                theta_ref: t.theta_ref,
            });
        }
        let load = LoadProgram::new(self.amplitude, self.omega, self.shape.clone());
        let n = grid.n_nodes();
        let mut u0 = vec![0.0; n];
        if let U0Kind::HalfSine { amplitude } = self.u0_kind {
            for i in 1..n - 1 {
                u0[i] = amplitude * (std::f64::consts::PI * grid.x(i) / grid.length()).sin();
            }
        }
        let theta0 = self
            .thermal
            .as_ref()
            .map(|t| vec![self.theta0_const.unwrap_or(t.theta_ref); n]);
        let initial = initial_state(&grid, u0, vec![0.0; n], vec![self.phi0_const; n], theta0)
            .map_err(|e| mk("initial", e.to_string()))?;
        let dt = self.resolve_dt(&params, &grid);
        let mut controls = StepControls::new(dt, self.t_end);
        controls.cfl_safety = self.cfl_safety;
        controls.phase_scheme = match self.phase_scheme {
            SchemeSpec::Explicit => PhaseScheme::Explicit,
            SchemeSpec::SemiImplicit => PhaseScheme::SemiImplicitDiffusion,
        };
        controls.sample_every = self.sample_every;
        controls.probe_node = self.probe_node;
        let thermal = self.thermal.is_some();
        Ok(RunSetup {
            params,
            grid,
            load,
            controls,
            initial,
            thermal,
        })
    }
}

/// Sweepable parameter axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Rho,
    Omega,
    Amplitude,
    F0,
    Kappa,
}

impl SweepAxis {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "rho" => Some(Self::Rho),
            "omega" => Some(Self::Omega),
            "amplitude" => Some(Self::Amplitude),
            "F0" | "f0" => Some(Self::F0),
            "kappa" => Some(Self::Kappa),
            _ => None,
        }
    }

    pub fn apply(&self, config: &RunConfig, value: f64) -> RunConfig {
        let mut c = config.clone();
        match self {
            Self::Rho => c.rho = value,
            Self::Omega => c.omega = value,
            Self::Amplitude => c.amplitude = value,
            Self::F0 => c.f0 = value,
            Self::Kappa => c.kappa = value,
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const MINIMAL: &str = "\
[grid]
L = 1.0
n_cells = 16
[material]
rho = 1.0
kappa = 20.0
F0 = 0.5
a = 1.0
[load]
amplitude = 0.4
omega = 2.0
shape = half_sine
[controls]
dt = auto
t_end = 1.0
phase_scheme = explicit
sample_every = 5
[initial]
u0_kind = zero
phi0_const = 0.0
[outputs]
trajectory_path = traj.csv
probe_node = 8
";

    #[test]
    fn minimal_config_parses_with_auto_dt() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.dt, DtSpec::Auto);
        assert_eq!(cfg.cfl_safety, 0.5);
        let setup = cfg.build().unwrap();
        let expected = stable_dt(&setup.params, &setup.grid) * 0.5;
        assert_eq!(setup.controls.dt, expected);
    }

    #[test]
    fn zero_rho_rejected_with_location() {
        let text = MINIMAL.replace("rho = 1.0", "rho = 0");
        let errs = parse_config(&text).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| e.location == "material.rho" && e.message.contains("must be > 0")));
    }

    #[test]
    fn phi0_out_of_range_rejected_with_range_message() {
        let text = MINIMAL.replace("phi0_const = 0.0", "phi0_const = 1.5");
        let errs = parse_config(&text).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| e.location == "initial.phi0_const" && e.message.contains("[0, 1]")));
    }

    #[test]
    fn unknown_key_rejected() {
        let text = format!("{MINIMAL}rho_typo = 3\n");
        let errs = parse_config(&text).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| e.location == "outputs.rho_typo" && e.message.contains("unknown key")));
    }

    #[test]
    fn partial_thermal_block_rejected() {
        let text = MINIMAL.replace("a = 1.0", "a = 1.0\nc = 2.0");
        let errs = parse_config(&text).unwrap_err();
        assert!(errs.iter().any(|e| e.message.contains("thermal mode needs")));
    }

    #[test]
    fn canonical_roundtrip() {
        let cfg = parse_config(MINIMAL).unwrap();
        let emitted = cfg.to_canonical_string();
        let reparsed = parse_config(&emitted).unwrap();
        assert_eq!(cfg, reparsed);
        // idempotent
        assert_eq!(emitted, reparsed.to_canonical_string());
    }

    #[test]
    fn thermal_roundtrip_with_default_theta0() {
        let text = MINIMAL.replace(
            "a = 1.0",
            "a = 1.0\nc = 2.0\nk_q = 0.1\nvarkappa = 0.5\ntheta_ref = 1.5",
        );
        let cfg = parse_config(&text).unwrap();
        assert_eq!(cfg.theta0_const, Some(1.5));
        let reparsed = parse_config(&cfg.to_canonical_string()).unwrap();
        assert_eq!(cfg, reparsed);
    }

    #[test]
    fn sweep_axis_applies_override() {
        let cfg = parse_config(MINIMAL).unwrap();
        let swept = SweepAxis::Rho.apply(&cfg, 3.0);
        assert_eq!(swept.rho, 3.0);
        assert_eq!(swept.omega, cfg.omega);
        assert!(SweepAxis::parse("bogus").is_none());
    }
}
