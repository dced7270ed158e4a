//! Catalog ingestion, the batch pipelines and report serialization behind
//! the `symflat` binary.

mod catalog;
mod report;

pub use catalog::{load_catalog, parse_catalog, Catalog, SpaceDescriptor, SpaceMultiplicities};
pub use report::{emit_asymptotic_report, emit_q_report, format_float, Format, JsonObject};

use crate::asymquad::{verify_tau_infinity, verify_tau_zero, AsymptoticReport, QuadratureConfig, Regime};
use crate::error::{Error, Result};
use crate::hcfun::{
    c_function, c_function_raw_product, f_factor, group_c_closed_form, predicted_constants, q_invariance_test,
    q_of_weight, QInvarianceReport,
};

/// Process exit status: the verdict agreed or the check passed.
pub const EXIT_AGREEMENT: i32 = 0;
/// The verdict disagreed with the classification or the check failed.
pub const EXIT_DISAGREEMENT: i32 = 1;
/// Bad input: unknown space, malformed catalog, invalid parameters.
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Sweeps every dominant weight with coefficients ≤ `max_coeff`.
pub fn run_flatness(catalog: &Catalog, name: &str, max_coeff: u32, tol: f64) -> Result<QInvarianceReport> {
    let rs = catalog.get(name)?.root_system()?;
    q_invariance_test(&rs, rs.dominant_weights(max_coeff)?, tol)
}

/// Runs one asymptotic check on a rank-one catalog entry.
pub fn run_asym(
    catalog: &Catalog,
    name: &str,
    regime: Regime,
    n: u32,
    cfg: &QuadratureConfig,
) -> Result<AsymptoticReport> {
    let rs = catalog.get(name)?.root_system()?;
    match regime {
        Regime::Zero => verify_tau_zero(&rs, n, cfg),
        Regime::Infinity => verify_tau_infinity(&rs, n, cfg),
    }
}

pub fn flatness_exit_code(report: &QInvarianceReport) -> i32 {
    if report.agrees() { EXIT_AGREEMENT } else { EXIT_DISAGREEMENT }
}

pub fn asym_exit_code(report: &AsymptoticReport) -> i32 {
    if report.passed { EXIT_AGREEMENT } else { EXIT_DISAGREEMENT }
}

/// One catalog entry with its derived root data, as JSON.
pub fn describe_space(space: &SpaceDescriptor) -> Result<String> {
    let rs = space.root_system()?;
    let rho = rs.rho();
    let weights = rs.fundamental_spherical_weights()?;
    let flat: Vec<f64> = weights.iter().flat_map(|w| w.coords().to_vec()).collect();
    let roots: Vec<f64> = rs.positive_roots().iter().flat_map(|r| r.vector.coords().to_vec()).collect();
    let mults: Vec<f64> = rs.positive_roots().iter().map(|r| r.multiplicity).collect();
    Ok(JsonObject::new()
        .string("name", &space.name)
        .string("root_type", space.root_type.as_str())
        .integer("rank", space.rank as u64)
        .integer("dim", space.dim_m.into())
        .float("metric_scale", space.metric_scale)
        .floats("positive_roots", &roots)
        .floats("multiplicities", &mults)
        .floats("rho", rho.coords())
        .floats("fundamental_weights", &flat)
        .boolean("reduced", rs.is_reduced())
        .boolean("group_manifold", rs.is_group_manifold())
        .string("source", space.source.as_deref().unwrap_or(""))
        .finish())
}

/// c-function values and the predicted constants at one weight, as JSON.
pub fn cfun_report(catalog: &Catalog, name: &str, coeffs: &[i64]) -> Result<String> {
    let rs = catalog.get(name)?.root_system()?;
    let weight = rs.spherical_weight(coeffs)?;
    let closed = match group_c_closed_form(&rs, &weight) {
        Ok(v) => Some(v),
        Err(Error::NotGroupManifold) => None,
        Err(e) => return Err(e),
    };
    let (a, b) = predicted_constants(&rs, &weight)?;
    Ok(JsonObject::new()
        .string("space", name)
        .integers("weight", weight.coeffs())
        .float("c", c_function(&rs, &weight)?)
        .float("c_raw_product", c_function_raw_product(&rs, &weight)?)
        .optional_float("c_closed_form", closed)
        .float("Q", q_of_weight(&rs, &weight)?)
        .float("A", a)
        .float("B", b)
        .finish())
}

/// `F(z, a, b, c, d)` and `F/2^d` at `z = 1, …, z_max`.
pub fn probe_f(a: f64, b: f64, c: f64, d: f64, z_max: u32, format: Format) -> Result<String> {
    if z_max == 0 {
        return Err(Error::InvalidParameter("zmax must be at least 1".into()));
    }
    let zs: Vec<f64> = (1..=z_max).map(f64::from).collect();
    let values = zs.iter().map(|&z| f_factor(z, a, b, c, d)).collect::<Result<Vec<f64>>>()?;
    let scaled: Vec<f64> = values.iter().map(|v| v / 2f64.powf(d)).collect();
    Ok(match format {
        Format::Json => JsonObject::new()
            .floats("z", &zs)
            .floats("F", &values)
            .floats("F_over_2_pow_d", &scaled)
            .finish(),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            writer.write_record(["z", "F", "F_over_2_pow_d"]).map_err(io)?;
            for i in 0..zs.len() {
                writer
                    .write_record([format_float(zs[i]), format_float(values[i]), format_float(scaled[i])])
                    .map_err(io)?;
            }
            String::from_utf8(writer.into_inner().map_err(|e| Error::Io(e.to_string()))?)
                .map_err(|e| Error::Io(e.to_string()))?
        }
    })
}
