use serde_json::{json, Value};

use super::{outcome, pass_if, CheckResult, CheckStatus, Context, Job};
use crate::error::{Error, Result};
use crate::g_modules::{
    check_lifting, decompose, projective_multiplicities, verify_lemma5, ModuleClassLabel, DecompositionReport,
};
use crate::rep_ring::{
    class_multiply, class_product, component_maps, consistency_audit, corollary2_check, verify_idempotents,
    AuditStatus, ClassElement, PresentedAlgebra,
};
use crate::reps::{
    are_equivalent, gamma_d, induce, is_irreducible, linear_characters_h, monomial_gamma2, projective_parts, tau,
    tau0, GroupModule, Representation, SearchMode,
};
use crate::syzygy::{augmentation_check, delta_h, displayed_f4, displayed_f5, f_matrix, verify_complex};

use super::RunConfig;
use super::CheckGroup;

fn job<F>(f: F) -> Job
where
    F: Fn(&Context, usize) -> Vec<CheckResult> + Send + Sync + 'static,
{
    Box::new(f)
}

fn single<F>(id: String, statement: String, parameters: Value, f: F) -> Job
where
    F: Fn(&Context, usize) -> Result<(CheckStatus, Value)> + Send + Sync + 'static,
{
    job(move |ctx, i| vec![outcome(ctx, id.clone(), statement.clone(), parameters.clone(), || f(ctx, i))])
}

pub(crate) fn jobs(group: CheckGroup, config: &RunConfig) -> Vec<Job> {
    match group {
        CheckGroup::Lemma1 => lemma1(),
        CheckGroup::Lemma2 => lemma2(),
        CheckGroup::Corollary1 => corollary1(),
        CheckGroup::Lemma4 => lemma4(config.syzygy_sweep),
        CheckGroup::Lemma5 => lemma5(config.max_k, config.max_n),
        CheckGroup::Corollary2 => corollary2(config.table_n),
        CheckGroup::Lemma6 => lemma6(),
        CheckGroup::Theorem => theorem(),
        CheckGroup::Audit => vec![job(audit)],
    }
}

fn named_irreducibles() -> Result<Vec<(&'static str, Representation)>> {
    Ok(vec![
        ("tau0", tau0()),
        ("tau", tau()),
        ("Gamma1", gamma_d(1)?),
        ("Gamma2", gamma_d(2)?),
        ("Gamma4", gamma_d(4)?),
    ])
}

fn relations_hold(r: &Representation) -> bool {
    Representation::new(r.a1().clone(), r.a2().clone(), r.b().clone()).is_ok()
}

fn decided(mode: &SearchMode) -> bool {
    matches!(mode, SearchMode::DegreeMismatch | SearchMode::Exhaustive { .. } | SearchMode::Fallback { .. })
}

fn lemma1() -> Vec<Job> {
    const NAMES: [&str; 5] = ["tau0", "tau", "Gamma1", "Gamma2", "Gamma4"];
    let mut jobs = Vec::new();
    for (k, name) in NAMES.into_iter().enumerate() {
        jobs.push(single(
            format!("lemma1.irreducible.{}", name),
            format!("Lemma 1: {} satisfies the defining relations and is irreducible", name),
            json!({ "module": name }),
            move |ctx, i| {
                let reps = named_irreducibles()?;
                let r = &reps[k].1;
                let relations = relations_hold(r);
                let irreducible = is_irreducible(r);
                let mut w = json!({
                    "degree": r.degree(),
                    "relations": relations,
                    "irreducible": irreducible,
                    "chi_a1": r.character().at_a1().to_string(),
                    "chi_b": r.character().at_b().to_string(),
                });
                let mut ok = relations && irreducible;
                if name == "Gamma2" {
                    let search = ctx.search(i);
                    let mono = are_equivalent(r, &monomial_gamma2(), &search)?.equivalent;
                    let ind = are_equivalent(r, &induce(&linear_characters_h()[2]), &search)?.equivalent;
                    w["monomial_equivalent"] = json!(mono);
                    w["induced_delta2_equivalent"] = json!(ind);
                    ok &= mono && ind;
                }
                Ok((pass_if(ok), w))
            },
        ));
    }
    for a in 0..NAMES.len() {
        for b in a + 1..NAMES.len() {
            jobs.push(single(
                format!("lemma1.inequivalent.{}.{}", NAMES[a], NAMES[b]),
                format!("Lemma 1: {} and {} are inequivalent", NAMES[a], NAMES[b]),
                json!({ "a": NAMES[a], "b": NAMES[b] }),
                move |ctx, i| {
                    let reps = named_irreducibles()?;
                    let e = are_equivalent(&reps[a].1, &reps[b].1, &ctx.search(i))?;
                    let status = if e.equivalent {
                        CheckStatus::Fail
                    } else if decided(&e.mode) {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Indeterminate
                    };
                    Ok((status, json!({ "hom_rank": e.hom_rank, "search": e.mode })))
                },
            ));
        }
    }
    jobs
}

fn decomposition_witness(r: &DecompositionReport) -> Value {
    json!({
        "found": r.summary(),
        "status": r.status,
        "witness_det_val2": r.witness_det_val2,
    })
}

fn lemma2() -> Vec<Job> {
    use ModuleClassLabel::{P0, P1};
    let cases = [(P0, P0, (2, 1)), (P0, P1, (2, 3)), (P1, P1, (6, 5))];
    cases
        .into_iter()
        .map(|(a, b, (s, t))| {
            let stated = if t == 1 { format!("{} P0 + P1", s) } else { format!("{} P0 + {} P1", s, t) };
            single(
                format!("lemma2.{}x{}", a, b),
                format!("Lemma 2: [{}][{}] = {}", a, b, stated),
                json!({}),
                move |ctx, i| {
                    let pp = projective_parts();
                    let pick = |l: &ModuleClassLabel| if *l == P0 { &pp.p0 } else { &pp.p1 };
                    let prod = pick(&a).tensor(pick(&b));
                    let solved = projective_multiplicities(&prod)?;
                    let rep = decompose(
                        &format!("{} x {}", a, b),
                        &prod,
                        &[P0, P1],
                        &ctx.registry,
                        &ctx.search(i),
                        false,
                    )?;
                    let ok = solved == (s, t)
                        && rep.is_resolved()
                        && rep.multiplicity(&P0) == s
                        && rep.multiplicity(&P1) == t;
                    let mut w = decomposition_witness(&rep);
                    w["character_solve"] = json!([solved.0, solved.1]);
                    w["chi_b"] = json!({
                        "P0": pp.p0.character().at_b().to_string(),
                        "P1": pp.p1.character().at_b().to_string(),
                    });
                    Ok((pass_if(ok), w))
                },
            )
        })
        .collect()
}

fn corollary1() -> Vec<Job> {
    vec![single(
        "corollary1.idempotents".into(),
        "Corollary 1: f1 = [Gamma]/12, f2 = [P0](1 - f1), f3 = (1 - [P0])(1 - f1) are orthogonal idempotents summing to 1, and [Gamma]^2 = 12[Gamma]".into(),
        json!({}),
        |ctx, _| {
            let t = ctx.table()?;
            let (f, cert) = verify_idempotents(t)?;
            let gamma = &ClassElement::class(ModuleClassLabel::P0) + &ClassElement::class(ModuleClassLabel::P1);
            let g2 = class_multiply(&gamma, &gamma, t)?;
            let twelve = g2 == gamma.scale(&num_rational::BigRational::from_integer(12.into()));
            Ok((
                pass_if(cert.passes() && twelve),
                json!({
                    "f1": f.f1, "f2": f.f2, "f3": f.f3,
                    "certificate": cert,
                    "gamma_squared": g2,
                }),
            ))
        },
    )]
}

fn lemma4(sweep: u32) -> Vec<Job> {
    let mut jobs = vec![single(
        "lemma4.augmentation".into(),
        "Lemma 4: Delta_1 over H is the augmentation ideal".into(),
        json!({}),
        |_, _| Ok((pass_if(augmentation_check()?), json!({}))),
    )];
    for n in 2..=sweep as usize {
        jobs.push(job(move |ctx, _| {
            let params = json!({ "n": n });
            let cert = verify_complex(n);
            let cert2 = cert.clone();
            vec![
                outcome(
                    ctx,
                    format!("lemma4.product_zero.n={}", n),
                    format!("Lemma 4: F_{} F_{} = 0", n - 1, n),
                    params.clone(),
                    || cert.map(|c| (pass_if(c.product_zero), json!({ "product_zero": c.product_zero }))),
                ),
                outcome(
                    ctx,
                    format!("lemma4.exactness.n={}", n),
                    format!("Lemma 4: image F_{} = kernel F_{} (rank {})", n, n - 1, 2 * n + 1),
                    params,
                    || cert2.map(|c| (pass_if(c.passes()), json!(c))),
                ),
            ]
        }));
    }
    for n in 1..=sweep as i64 {
        jobs.push(single(
            format!("lemma4.rank.n={}", n),
            format!("Lemma 4: rank Delta_{} = {}", n, 2 * n + 1),
            json!({ "n": n }),
            move |_, _| {
                let d = delta_h(n)?.degree();
                Ok((pass_if(d as i64 == 2 * n + 1), json!({ "rank": d })))
            },
        ));
    }
    for (k, shown) in [(4usize, displayed_f4 as fn() -> _), (5, displayed_f5)] {
        jobs.push(single(
            format!("lemma4.displayed.F{}", k),
            format!("Lemma 4: the displayed F_{} matches the general pattern", k),
            json!({ "n": k }),
            move |_, _| {
                let eq = f_matrix(k) == shown();
                Ok((pass_if(eq), json!({ "equal": eq })))
            },
        ));
    }
    jobs
}

fn lemma5(max_k: u32, max_n: u32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in 0..=max_k {
        jobs.push(single(
            format!("lemma5.k={}", k),
            format!(
                "Lemma 5: covers of Delta_m and Delta_m x Delta_1 for {} <= m <= {}",
                3 * k,
                3 * k + 2
            ),
            json!({ "k": k }),
            move |ctx, i| {
                let c = verify_lemma5(k, &ctx.registry, &ctx.search(i))?;
                Ok((pass_if(c.passes()), json!(c)))
            },
        ));
    }
    for n in 0..=max_n as i64 {
        jobs.push(single(
            format!("lemma5.lifting.n={}", n),
            format!("Lemma 5: Delta_{} over G restricts to Delta_{} over H and splits off its induction", n, n),
            json!({ "n": n }),
            move |ctx, i| {
                let c = check_lifting(n, &ctx.registry, &ctx.search(i))?;
                Ok((pass_if(c.passes()), json!(c)))
            },
        ));
    }
    jobs.push(single(
        "lemma5.P0xDelta1".into(),
        "Lemma 5: [P0][Delta_1] = [P0] + [P1]".into(),
        json!({}),
        |ctx, i| {
            let pp = projective_parts();
            let t = pp.p0.tensor(ctx.registry.delta(1)?.as_ref());
            let r = decompose(
                "P0 x Delta(1)",
                &t,
                &[ModuleClassLabel::P0, ModuleClassLabel::P1],
                &ctx.registry,
                &ctx.search(i),
                false,
            )?;
            Ok((pass_if(r.is_resolved() && r.summary() == "P0 + P1"), decomposition_witness(&r)))
        },
    ));
    jobs.push(single(
        "lemma5.chi_delta2_b".into(),
        "Lemma 5: the character of Delta_2 at b is -1".into(),
        json!({}),
        |ctx, _| {
            let c = ctx.registry.delta(2)?.character().at_b().to_string();
            Ok((pass_if(c == "-1"), json!({ "chi_b": c })))
        },
    ));
    jobs
}

fn corollary2(table_n: u32) -> Vec<Job> {
    let t = table_n as i64;
    let mut jobs = Vec::new();
    for n in -t..=t {
        for m in n..=t {
            jobs.push(single(
                format!("corollary2.n={}.m={}", n, m),
                format!("Corollary 2: [Delta_{}][Delta_{}] f3 = [Delta_{}] f3", n, m, n + m),
                json!({ "n": n, "m": m }),
                move |ctx, _| {
                    let c = corollary2_check(n, m, ctx.table()?)?;
                    Ok((pass_if(c.holds), json!(c)))
                },
            ));
        }
    }
    jobs.push(single(
        "corollary2.tau_squared".into(),
        "Corollary 2: [Tau]^2 = 2[Delta_0] + [Tau]".into(),
        json!({}),
        |ctx, _| {
            let p = class_product(&ModuleClassLabel::Tau, &ModuleClassLabel::Tau, ctx.table()?)?;
            Ok((pass_if(p.to_string() == "2 Delta(0) + Tau"), json!({ "product": p })))
        },
    ));
    jobs
}

fn lemma6() -> Vec<Job> {
    use ModuleClassLabel::{Delta, Tau, L};
    let direct = |id: &str, a: ModuleClassLabel, stated: &'static str| {
        single(
            format!("lemma6.{}", id),
            format!("Lemma 6: [{}]^2 = {}", a, stated),
            json!({}),
            move |ctx, i| {
                let m = ctx.registry.get(&a)?;
                let t = m.tensor(m.as_ref());
                let r = decompose(
                    &format!("{} x {}", a, a),
                    &t,
                    &[Delta(0), Tau, L],
                    &ctx.registry,
                    &ctx.search(i),
                    false,
                )?;
                Ok((pass_if(r.is_resolved() && r.summary() == stated), decomposition_witness(&r)))
            },
        )
    };
    vec![
        direct("LxL", L, "Delta(0) + Tau + 2 L"),
        direct("TauxTau", Tau, "2 Delta(0) + Tau"),
        single(
            "lemma6.first_equation".into(),
            "Lemma 6, first displayed equation: [Tau]^2 = [Tau] + [Delta_0]".into(),
            json!({}),
            |ctx, i| {
                let t = ctx.registry.get(&Tau)?;
                let sq = t.tensor(t.as_ref());
                let r = decompose("Tau x Tau", &sq, &[Delta(0), Tau], &ctx.registry, &ctx.search(i), false)?;
                Ok((
                    CheckStatus::Report,
                    json!({
                        "as_displayed": "Tau + Delta(0)",
                        "displayed_degree": 3,
                        "computed": r.summary(),
                        "computed_degree": sq.degree(),
                        "agrees_with": ["corollary2.tau_squared", "y^2 = y + 2"],
                    }),
                ))
            },
        ),
    ]
}

fn theorem() -> Vec<Job> {
    vec![
        single(
            "theorem.relations".into(),
            "Theorem: y^2 - y - 2 and z^2 - 2z - y - 1 reduce to 0".into(),
            json!({}),
            |_, _| {
                let a = PresentedAlgebra::new();
                let rels: Vec<String> = a.relations().into_iter().map(|(s, _)| s).collect();
                let ok = a.normalize_str("y^2 - y - 2")?.is_zero() && a.normalize_str("z^2 - 2z - y - 1")?.is_zero();
                Ok((pass_if(ok), json!({ "relations": rels })))
            },
        ),
        single(
            "theorem.factorizations".into(),
            "Theorem: (z + 1)(z - 3) = 0 at y = 2 and z(z - 2) = 0 at y = -1".into(),
            json!({}),
            |_, _| {
                let a = PresentedAlgebra::new();
                let f1 = a.normalize_str("(z + 1)(z - 3)")?;
                let f2 = a.normalize_str("z(z - 2)")?;
                let ok = f1 == a.normalize_str("y - 2")? && f2 == a.normalize_str("y + 1")?;
                Ok((
                    pass_if(ok),
                    json!({ "(z+1)(z-3)": f1.to_string(), "z(z-2)": f2.to_string() }),
                ))
            },
        ),
        single(
            "theorem.confluence".into(),
            "Theorem: the rewriting system is locally confluent, normal forms x^k {1, y, z, yz}".into(),
            json!({}),
            |_, _| {
                let a = PresentedAlgebra::new();
                let yz = a.normalize_str("z*yz")?.to_string();
                let yzyz = a.normalize_str("yz*yz")?.to_string();
                Ok((pass_if(a.locally_confluent()), json!({ "z*yz": yz, "yz*yz": yzyz })))
            },
        ),
        single(
            "theorem.components".into(),
            "Theorem: the algebra splits into four copies of R[x, 1/x]".into(),
            json!({}),
            |_, _| {
                let c = component_maps();
                Ok((pass_if(c.passes()), json!(c)))
            },
        ),
    ]
}

fn audit(ctx: &Context, _: usize) -> Vec<CheckResult> {
    let failed = |e: Error| {
        vec![outcome(ctx, "audit", "Consistency audit of the presentation", json!({}), || Err(e))]
    };
    let table = match ctx.table() {
        Ok(t) => t,
        Err(e) => return failed(e),
    };
    let report = match consistency_audit(table) {
        Ok(r) => r,
        Err(e) => return failed(e),
    };
    let defining = ["y*y", "z*z", "x*x^-1"];
    let mut out = Vec::new();
    for line in &report.lines {
        let product = line.relation.split(" = ").next().unwrap_or_default().to_string();
        let status = if defining.contains(&product.as_str()) {
            match line.status {
                AuditStatus::Holds => CheckStatus::Pass,
                AuditStatus::Fails => CheckStatus::Fail,
                _ => CheckStatus::Indeterminate,
            }
        } else if line.status == AuditStatus::Fails {
            CheckStatus::Fail
        } else {
            CheckStatus::Report
        };
        out.push(outcome(
            ctx,
            format!("audit.{}", product),
            format!("Audit: {}", line.relation),
            json!({ "table_n": table.table_n }),
            || Ok((status, json!(line))),
        ));
    }
    let inj = &report.injectivity;
    out.push(outcome(
        ctx,
        "audit.injectivity",
        format!("Audit: u -> u f3 is injective on the non-projective classes up to level {}", inj.level),
        json!({ "table_n": table.table_n }),
        || Ok((pass_if(inj.injective), json!(inj))),
    ));
    out
}
