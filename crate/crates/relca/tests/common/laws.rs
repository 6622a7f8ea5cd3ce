//! Checks shared by the law tests and the acceptance runner. Each returns a
//! description of the first violation.

use relca_core::engine::{
    bottom_family, ef_closure, ef_star, family_leq, pq_closure, pq_star, rca_gfp, rca_lfp, top_family, Family,
};
use relca_core::lattice::{fca, kappa};
use relca_core::oracle::{oracle_acceptable, oracle_enumerate};
use relca_core::space::{closure_image_report, enumerate_acceptable};
use relca_core::{RelationalContextFamily, ScaledAttribute};

use super::random::{Instance, SPACE_LIMIT};

type Sets = Vec<Vec<ScaledAttribute>>;

const BUDGET: u128 = 1 << SPACE_LIMIT;

fn ensure(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// Families chosen by `bits` and by `bits ∪ extra` over the full language.
pub fn picked(inst: &Instance) -> (Family, Family) {
    let rcf = &inst.rcf;
    let mut i = 0;
    let (mut a, mut b): (Sets, Sets) = (Vec::new(), Vec::new());
    for x in 0..rcf.len() {
        let (mut sa, mut sb) = (Vec::new(), Vec::new());
        for attr in rcf.full_language(x).unwrap() {
            let (p, e) = (inst.pick[i % 64], inst.extra[i % 64]);
            if p {
                sa.push(attr.clone());
            }
            if p || e {
                sb.push(attr);
            }
            i += 1;
        }
        sa.sort();
        sb.sort();
        a.push(sa);
        b.push(sb);
    }
    (Family::from_scaled(rcf, &a).unwrap(), Family::from_scaled(rcf, &b).unwrap())
}

fn leq(o: &Family, p: &Family) -> bool {
    family_leq(o, p).unwrap()
}

fn sorted(mut v: Vec<Sets>) -> Vec<Sets> {
    v.sort();
    v
}

/// The enumerator and the oracle find the same acceptable families.
pub fn oracle_agrees(rcf: &RelationalContextFamily) -> Result<(), String> {
    let expected = sorted(oracle_acceptable(rcf, BUDGET).map_err(|e| e.to_string())?);
    for pruning in [true, false] {
        let report = enumerate_acceptable(rcf, BUDGET, pruning).map_err(|e| e.to_string())?;
        let got = sorted(report.acceptable.iter().map(Family::scaled_sets).collect());
        if got != expected {
            return Err(format!("pruning={pruning}: enumerator found {} families, oracle {}", got.len(), expected.len()));
        }
    }
    Ok(())
}

pub fn laws(inst: &Instance) -> Result<(), String> {
    let rcf = &inst.rcf;
    let (o, p) = picked(inst);
    ensure(leq(&o, &p), "picked families are ordered")?;

    ensure(leq(&o, &ef_star(&o, rcf)), "EF* is extensive")?;
    ensure(leq(&ef_star(&o, rcf), &ef_star(&p, rcf)), "EF* is monotone")?;
    ensure(leq(&pq_star(&o, rcf), &o), "PQ* is anti-extensive")?;
    ensure(leq(&pq_star(&o, rcf), &pq_star(&p, rcf)), "PQ* is monotone")?;

    let ef = ef_closure(&o, rcf).unwrap();
    ensure(ef_closure(&ef, rcf).unwrap() == ef, "EF* closure is idempotent")?;
    ensure(ef_star(&ef, rcf) == ef, "EF* closure is a fixed point")?;
    let pq = pq_closure(&o, rcf).unwrap();
    ensure(pq_closure(&pq, rcf).unwrap() == pq, "PQ* closure is idempotent")?;
    ensure(pq_star(&pq, rcf) == pq, "PQ* closure is a fixed point")?;

    for x in 0..o.len() {
        let k = o.context(x);
        ensure(kappa(&fca(k)) == *k, "kappa after fca is the identity")?;
        ensure(fca(&kappa(o.lattice(x))) == *o.lattice(x), "fca after kappa is the identity")?;
    }

    let report = closure_image_report(&o, rcf).unwrap();
    ensure(report.lower_leq_upper, "EF*∞(PQ*∞(O)) below PQ*∞(EF*∞(O))")?;

    // Fixed points against the brute-force space: the least fixed point is
    // the meet of all saturated families, the greatest the join of all
    // self-supported ones.
    let lfp = rca_lfp(rcf).unwrap();
    let gfp = rca_gfp(rcf).unwrap();
    ensure(ef_closure(&bottom_family(rcf), rcf).unwrap() == lfp, "lfp is the EF* closure of the bottom")?;
    ensure(pq_closure(&top_family(rcf).unwrap(), rcf).unwrap() == gfp, "gfp is the PQ* closure of the top")?;
    let entries = oracle_enumerate(rcf, BUDGET).unwrap();
    let mut meet: Option<Sets> = None;
    let mut join: Sets = vec![Vec::new(); rcf.len()];
    for e in &entries {
        if e.saturated {
            meet = Some(match meet {
                None => e.sets.clone(),
                Some(m) => m.iter().zip(&e.sets).map(|(a, b)| a.iter().filter(|s| b.contains(s)).cloned().collect()).collect(),
            });
        }
        if e.self_supported {
            for (j, s) in join.iter_mut().zip(&e.sets) {
                for a in s {
                    if !j.contains(a) {
                        j.push(a.clone());
                    }
                }
            }
        }
        if e.acceptable() {
            let f = Family::from_scaled(rcf, &e.sets).unwrap();
            ensure(leq(&lfp, &f) && leq(&f, &gfp), "acceptable family inside [lfp, gfp]")?;
        }
    }
    for j in &mut join {
        j.sort();
    }
    ensure(meet.as_ref() == Some(&lfp.scaled_sets()), "lfp is the meet of the saturated families")?;
    ensure(join == gfp.scaled_sets(), "gfp is the join of the self-supported families")?;
    Ok(())
}
