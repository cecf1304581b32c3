use rayon::prelude::*;
use serde_json::json;
use tautslope::divisors::{hypersurface_combo, slope_report, standard_instances, syzygy_combo, syzygy_r};
use tautslope::families::{
    aspect_counts, epsilon_matrix, identity_castelnuovo, identity_pieri, identity_weierstrass_a,
    identity_weierstrass_c, quotient_relation_check, reconstruct, rho_zero_triples, Evaluation, Report, Taut,
};
use tautslope::numeric::{format_pq, int};
use tautslope::schubert::{brute_zeta_integral, zeta_integral_table, zeta_power_integral, GrassmannianSpec};
use tautslope::{GrdParams, Rational};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    SchubertOracle,
    Castelnuovo,
    Weierstrass,
    Pieri,
    Aspects,
    Epsilon,
    Reconstruct,
    Symmetry,
    All,
}

pub const DEFAULT_RECONSTRUCT: [(u32, u32, u32); 4] = [(6, 2, 6), (8, 3, 9), (10, 4, 12), (21, 6, 24)];

pub struct VerifyConfig {
    pub max_g: u32,
    pub r_max: u32,
    pub d_max: u32,
    /// Literal repeated-Pieri products on Grassmannians up to this dimension.
    pub brute_dim: u32,
    pub eps_max: u32,
    pub triples: Vec<GrdParams>,
}

type Reports = Result<Vec<Report>, String>;

fn failed(check: &str, params: serde_json::Value, err: impl std::fmt::Display) -> Report {
    Report {
        check: check.into(),
        params,
        lhs: "error".into(),
        rhs: String::new(),
        pass: false,
        detail: Some(err.to_string()),
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Reports {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::value_variants().iter().copied().filter(|s| *s != Suite::All).collect()
    } else {
        vec![suite]
    };
    let mut out = Vec::new();
    for s in suites {
        out.extend(match s {
            Suite::SchubertOracle => schubert_oracle(cfg),
            Suite::Castelnuovo => castelnuovo(cfg),
            Suite::Weierstrass => weierstrass(cfg),
            Suite::Pieri => pieri(cfg),
            Suite::Aspects => aspects(cfg),
            Suite::Epsilon => epsilon(cfg),
            Suite::Reconstruct => reconstruction(cfg),
            Suite::Symmetry => symmetry(),
            Suite::All => unreachable!(),
        }?);
    }
    Ok(out)
}

/// The user's triples if any, otherwise every `rho = 0` triple up to `max_g`.
fn triples(cfg: &VerifyConfig) -> Vec<GrdParams> {
    if cfg.triples.is_empty() {
        rho_zero_triples(cfg.max_g)
    } else {
        cfg.triples.clone()
    }
}

fn grd_json(p: &GrdParams) -> serde_json::Value {
    json!({ "g": p.g, "r": p.r, "d": p.d })
}

fn schubert_oracle(cfg: &VerifyConfig) -> Reports {
    let mut specs = Vec::new();
    for r in 0..=cfg.r_max {
        for d in r..=cfg.d_max {
            specs.push(GrassmannianSpec::new(r, d).map_err(|e| e.to_string())?);
        }
    }
    Ok(specs.par_iter().map(|&spec| schubert_on(spec, cfg.brute_dim)).collect())
}

/// Closed form against the strip-rule table for every balanced `(b, k)`,
/// and against literal repeated multiplication on small Grassmannians.
fn schubert_on(spec: GrassmannianSpec, brute_dim: u32) -> Report {
    let params = json!({ "r": spec.r(), "d": spec.d() });
    let literal = spec.dim() <= brute_dim;
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for (idx, (k, value)) in zeta_integral_table(spec) {
        let closed = match zeta_power_integral(spec, &idx, k) {
            Ok(v) => v,
            Err(e) => return failed("schubert_oracle", params, e),
        };
        let table = Rational::from_integer(value);
        let brute = if literal { brute_zeta_integral(spec, &idx, k).ok() } else { None };
        checked += 1;
        if closed != table || brute.as_ref().is_some_and(|b| *b != closed) {
            mismatches.push(format!("{idx} k={k}: closed {} table {}", format_pq(&closed), format_pq(&table)));
        }
    }
    let route = if literal { "table and literal products" } else { "table" };
    Report {
        check: "schubert_oracle".into(),
        params,
        lhs: format!("{} mismatches", mismatches.len()),
        rhs: "0 mismatches".into(),
        pass: mismatches.is_empty(),
        detail: Some(if mismatches.is_empty() {
            format!("{checked} balanced integrals agree ({route})")
        } else {
            mismatches.join("; ")
        }),
    }
}

fn per_triple(
    cfg: &VerifyConfig,
    keep: impl Fn(&GrdParams) -> bool + Sync,
    check: &str,
    f: impl Fn(&GrdParams) -> tautslope::Result<Vec<Report>> + Sync,
) -> Reports {
    let ts: Vec<GrdParams> = triples(cfg).into_iter().filter(|p| keep(p)).collect();
    let nested: Vec<Vec<Report>> = ts
        .par_iter()
        .map(|p| f(p).unwrap_or_else(|e| vec![failed(check, grd_json(p), e)]))
        .collect();
    Ok(nested.into_iter().flatten().collect())
}

fn evaluation(cfg: &VerifyConfig) -> Evaluation {
    Evaluation { brute_max_g: cfg.max_g }
}

fn castelnuovo(cfg: &VerifyConfig) -> Reports {
    let ev = evaluation(cfg);
    per_triple(cfg, |_| true, "castelnuovo", |p| Ok(vec![identity_castelnuovo(p, ev)?]))
}

fn weierstrass(cfg: &VerifyConfig) -> Reports {
    let ev = evaluation(cfg);
    per_triple(cfg, |p| p.g >= 3, "weierstrass", |p| {
        let mut v = vec![identity_weierstrass_a(p, ev)?];
        if p.r >= 2 {
            v.push(identity_weierstrass_c(p, ev)?);
        }
        Ok(v)
    })
}

fn pieri(cfg: &VerifyConfig) -> Reports {
    per_triple(cfg, |p| p.r >= 2, "pieri", |p| identity_pieri(p.r, p.d))
}

fn aspects(cfg: &VerifyConfig) -> Reports {
    per_triple(cfg, |p| p.g >= 2, "aspect_counts", |p| Ok(vec![aspect_counts(p)?.report()]))
}

fn epsilon(cfg: &VerifyConfig) -> Reports {
    Ok((5..=cfg.eps_max.max(5))
        .into_par_iter()
        .map(|g| match epsilon_matrix(g) {
            Ok(m) => Report {
                check: "epsilon_matrix".into(),
                params: json!({ "g": g }),
                lhs: format_pq(&m.determinant),
                rhs: "nonzero".into(),
                pass: m.nonsingular(),
                detail: None,
            },
            Err(e) => failed("epsilon_matrix", json!({ "g": g }), e),
        })
        .collect())
}

fn reconstruction(cfg: &VerifyConfig) -> Reports {
    let ts: Vec<GrdParams> = if cfg.triples.is_empty() {
        DEFAULT_RECONSTRUCT.iter().map(|&(g, r, d)| GrdParams { g, r, d }).collect()
    } else {
        cfg.triples.clone()
    };
    let nested: Vec<Vec<Report>> = ts
        .par_iter()
        .map(|p| {
            let mut v: Vec<Report> = Taut::ALL
                .iter()
                .map(|&w| match reconstruct(p, w) {
                    Ok(rec) => rec.report(),
                    Err(e) => failed("reconstruct", json!({ "g": p.g, "r": p.r, "d": p.d, "class": w.to_string() }), e),
                })
                .collect();
            v.push(quotient_relation_check(p, Taut::B).unwrap_or_else(|e| failed("quotient_relation", grd_json(p), e)));
            v
        })
        .collect();
    Ok(nested.into_iter().flatten().collect())
}

/// `ψ`-coefficient zero and `δ_i = δ_{g-i}` for every instance, plus the
/// hypersurface `k = 2` combination against syzygy `i = 0`.
fn symmetry() -> Reports {
    let mut out: Vec<Report> = standard_instances()
        .par_iter()
        .map(|fp| {
            let params = json!({ "instance": fp.to_string(), "g": fp.g(), "d": fp.d() });
            match slope_report(fp) {
                Ok(rep) => {
                    let defects = rep.pushforward.reflection_defects();
                    let psi = &rep.pushforward.psi;
                    Report {
                        check: "symmetry".into(),
                        params,
                        lhs: format!("psi {}, asymmetric delta indices {defects:?}", format_pq(psi)),
                        rhs: "psi 0/1, asymmetric delta indices []".into(),
                        pass: *psi == int(0) && defects.is_empty(),
                        detail: None,
                    }
                }
                Err(e) => failed("symmetry", params, e),
            }
        })
        .collect();
    for s in 0..=4 {
        let syz = syzygy_combo(0, s);
        let r = syzygy_r(0, s);
        let params = json!({ "s": s, "r": r });
        out.push(match hypersurface_combo(r, s, 2) {
            Ok(hyp) => Report {
                check: "hypersurface_k2_vs_syzygy_i0".into(),
                params,
                lhs: hyp.to_string(),
                rhs: syz.to_string(),
                pass: hyp == syz,
                detail: None,
            },
            Err(e) => failed("hypersurface_k2_vs_syzygy_i0", params, e),
        });
    }
    Ok(out)
}
