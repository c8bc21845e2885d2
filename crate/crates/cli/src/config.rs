//! Experiment configuration: TOML schema, unit conversion, overrides.
//!
//! Files carry laboratory units (MHz, GHz, ns); everything is converted
//! to angular rad/ns and 1/ns here, at parse time, so the physics crate
//! only ever sees consistent units. Drive amplitudes and detunings are
//! cycle frequencies (multiplied by 2 pi); decoherence rates are inverse
//! lifetimes (no 2 pi).

use std::f64::consts::TAU;
use std::path::Path;

use serde::Deserialize;

use qpt_core::{DecoherenceRates, HamiltonianKind, PulseParams, TimeGrid};

use crate::error::{AppError, Result};

const MRAD_PER_MHZ: f64 = 1e-3 * TAU;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ProcessName {
    Stirap,
    Sastirap,
    Twophoton,
    Identity,
}

impl ProcessName {
    pub fn kind(self) -> HamiltonianKind {
        match self {
            ProcessName::Stirap => HamiltonianKind::Stirap,
            ProcessName::Sastirap => HamiltonianKind::SaStirap,
            ProcessName::Twophoton => HamiltonianKind::TwoPhoton,
            ProcessName::Identity => HamiltonianKind::Identity,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ProcessName::Stirap => "stirap",
            ProcessName::Sastirap => "sastirap",
            ProcessName::Twophoton => "twophoton",
            ProcessName::Identity => "identity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum DecoherenceName {
    None,
    D1,
    D2,
    Custom,
}

impl DecoherenceName {
    pub fn label(self) -> &'static str {
        match self {
            DecoherenceName::None => "none",
            DecoherenceName::D1 => "d1",
            DecoherenceName::D2 => "d2",
            DecoherenceName::Custom => "custom",
        }
    }
}

/// Low-decoherence preset, rates in MHz.
const D1_MHZ: [f64; 5] = [0.5, 0.71, 0.4, 0.56, 0.96];
/// High-decoherence preset, rates in MHz.
const D2_MHZ: [f64; 5] = [2.5, 3.55, 2.0, 2.8, 4.8];

fn rates_from_mhz(mhz: [f64; 5]) -> DecoherenceRates {
    DecoherenceRates {
        gamma_rel_10: mhz[0] * 1e-3,
        gamma_rel_21: mhz[1] * 1e-3,
        gamma_phi_10: mhz[2] * 1e-3,
        gamma_phi_21: mhz[3] * 1e-3,
        gamma_phi_20: mhz[4] * 1e-3,
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PulsesSection {
    #[serde(default = "default_amp_mhz")]
    pub amp01_mhz: f64,
    #[serde(default = "default_amp_mhz")]
    pub amp12_mhz: f64,
    #[serde(default = "default_sigma_ns")]
    pub sigma_ns: f64,
    #[serde(default = "default_t_sep_ns")]
    pub t_sep_ns: f64,
    #[serde(default)]
    pub phi01_rad: f64,
    #[serde(default)]
    pub phi12_rad: f64,
    #[serde(default = "default_phi02_rad")]
    pub phi02_rad: f64,
}

fn default_amp_mhz() -> f64 {
    45.0
}
fn default_sigma_ns() -> f64 {
    35.0
}
fn default_t_sep_ns() -> f64 {
    -28.0
}
fn default_phi02_rad() -> f64 {
    std::f64::consts::FRAC_PI_2
}

impl Default for PulsesSection {
    fn default() -> Self {
        PulsesSection {
            amp01_mhz: default_amp_mhz(),
            amp12_mhz: default_amp_mhz(),
            sigma_ns: default_sigma_ns(),
            t_sep_ns: default_t_sep_ns(),
            phi01_rad: 0.0,
            phi12_rad: 0.0,
            phi02_rad: default_phi02_rad(),
        }
    }
}

/// Qutrit transition frequencies. Only their difference matters: the
/// two-photon carrier detuning is Delta = (omega01 - omega12) / 2.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrequenciesSection {
    #[serde(default = "default_omega01_ghz")]
    pub omega01_ghz: f64,
    #[serde(default = "default_omega12_ghz")]
    pub omega12_ghz: f64,
}

fn default_omega01_ghz() -> f64 {
    5.27
}
fn default_omega12_ghz() -> f64 {
    4.82
}

impl Default for FrequenciesSection {
    fn default() -> Self {
        FrequenciesSection {
            omega01_ghz: default_omega01_ghz(),
            omega12_ghz: default_omega12_ghz(),
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DetuningsSection {
    #[serde(default)]
    pub delta01_mhz: f64,
    #[serde(default)]
    pub delta12_mhz: f64,
}

/// Custom decoherence rates in MHz; only honored with
/// `decoherence = "custom"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatesSection {
    pub gamma_rel_10_mhz: f64,
    pub gamma_rel_21_mhz: f64,
    pub gamma_phi_10_mhz: f64,
    pub gamma_phi_21_mhz: f64,
    pub gamma_phi_20_mhz: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    #[serde(default = "default_t_start_ns")]
    pub t_start_ns: f64,
    #[serde(default = "default_t_end_ns")]
    pub t_end_ns: f64,
    #[serde(default = "default_steps")]
    pub steps: usize,
}

fn default_t_start_ns() -> f64 {
    -182.0
}
fn default_t_end_ns() -> f64 {
    140.0
}
fn default_steps() -> usize {
    1800
}

impl Default for GridSection {
    fn default() -> Self {
        GridSection {
            t_start_ns: default_t_start_ns(),
            t_end_ns: default_t_end_ns(),
            steps: default_steps(),
        }
    }
}

fn default_process() -> ProcessName {
    ProcessName::Stirap
}
fn default_decoherence() -> DecoherenceName {
    DecoherenceName::None
}

/// Whole experiment description. Every field has a default, so the empty
/// file is the reference experiment: a resonant STIRAP passage without
/// decoherence on the standard window.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_process")]
    pub process: ProcessName,
    #[serde(default = "default_decoherence")]
    pub decoherence: DecoherenceName,
    #[serde(default)]
    pub pulses: PulsesSection,
    #[serde(default)]
    pub frequencies: FrequenciesSection,
    #[serde(default)]
    pub detunings: DetuningsSection,
    #[serde(default)]
    pub decoherence_rates: Option<RatesSection>,
    #[serde(default)]
    pub grid: GridSection,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            process: default_process(),
            decoherence: default_decoherence(),
            pulses: PulsesSection::default(),
            frequencies: FrequenciesSection::default(),
            detunings: DetuningsSection::default(),
            decoherence_rates: None,
            grid: GridSection::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            AppError::Config(format!("cannot read {}: {e}", path.display()))
        })?;
        let config: ExperimentConfig = toml::from_str(&text)
            .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))?;
        config.check()?;
        Ok(config)
    }

    fn check(&self) -> Result<()> {
        if self.decoherence_rates.is_some() && self.decoherence != DecoherenceName::Custom {
            return Err(AppError::Config(
                "a [decoherence_rates] section requires decoherence = \"custom\"".into(),
            ));
        }
        if self.decoherence == DecoherenceName::Custom && self.decoherence_rates.is_none() {
            return Err(AppError::Config(
                "decoherence = \"custom\" requires a [decoherence_rates] section".into(),
            ));
        }
        Ok(())
    }

    pub fn apply_overrides(
        &mut self,
        process: Option<ProcessName>,
        decoherence: Option<DecoherenceName>,
    ) -> Result<()> {
        if let Some(p) = process {
            self.process = p;
        }
        if let Some(d) = decoherence {
            if d == DecoherenceName::Custom && self.decoherence_rates.is_none() {
                return Err(AppError::Config(
                    "--decoherence custom needs rates from a config file".into(),
                ));
            }
            // presets drop any file-supplied custom rates
            if d != DecoherenceName::Custom {
                self.decoherence_rates = None;
            }
            self.decoherence = d;
        }
        Ok(())
    }

    pub fn pulse_params(&self) -> Result<PulseParams> {
        let p = &self.pulses;
        let big_delta =
            (self.frequencies.omega01_ghz - self.frequencies.omega12_ghz) / 2.0 * TAU;
        let params = PulseParams {
            amp01: p.amp01_mhz * MRAD_PER_MHZ,
            amp12: p.amp12_mhz * MRAD_PER_MHZ,
            sigma: p.sigma_ns,
            t_sep: p.t_sep_ns,
            phi01: p.phi01_rad,
            phi12: p.phi12_rad,
            phi02: p.phi02_rad,
            delta01: self.detunings.delta01_mhz * MRAD_PER_MHZ,
            delta12: self.detunings.delta12_mhz * MRAD_PER_MHZ,
            big_delta,
        };
        params
            .validate()
            .map_err(|e| AppError::Config(e.to_string()))?;
        Ok(params)
    }

    pub fn rates(&self) -> Result<DecoherenceRates> {
        let rates = match self.decoherence {
            DecoherenceName::None => DecoherenceRates::none(),
            DecoherenceName::D1 => rates_from_mhz(D1_MHZ),
            DecoherenceName::D2 => rates_from_mhz(D2_MHZ),
            DecoherenceName::Custom => {
                let r = self.decoherence_rates.as_ref().ok_or_else(|| {
                    AppError::Config("custom decoherence without rates".into())
                })?;
                rates_from_mhz([
                    r.gamma_rel_10_mhz,
                    r.gamma_rel_21_mhz,
                    r.gamma_phi_10_mhz,
                    r.gamma_phi_21_mhz,
                    r.gamma_phi_20_mhz,
                ])
            }
        };
        rates
            .validate()
            .map_err(|e| AppError::Config(e.to_string()))?;
        Ok(rates)
    }

    pub fn time_grid(&self) -> Result<TimeGrid> {
        TimeGrid::new(self.grid.t_start_ns, self.grid.t_end_ns, self.grid.steps)
            .map_err(|e| AppError::Config(e.to_string()))
    }

    pub fn preset(decoherence: DecoherenceName) -> DecoherenceRates {
        match decoherence {
            DecoherenceName::None => DecoherenceRates::none(),
            DecoherenceName::D1 => rates_from_mhz(D1_MHZ),
            DecoherenceName::D2 => rates_from_mhz(D2_MHZ),
            DecoherenceName::Custom => DecoherenceRates::none(),
        }
    }
}
