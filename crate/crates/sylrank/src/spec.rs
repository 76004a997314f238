//! Rank-function, ring-hom, epimorphism and directed-system specs.

use sylrank_core::rank::{rk_convex, rk_field, rk_group_vn, rk_morita, rk_pullback, rk_zmod_pk};
use sylrank_core::transport::{DirectedSystem, RModuleStructureOnS};
use sylrank_core::{Matrix, MatrixRankFn, Ring, RingHom};

use crate::parse::{core_error, group, matrix, ring, scalar, whole, Cursor, ParseResult};

/// `rkQ | rkFp(p) | rkZmodPk(p,k) | vN(k,G) | pullback(hom,fn) |
/// convex(w1*fn1+...) | morita(fn,k)`.
///
/// `ring` is the ring the result should live over, when known; homs whose
/// source cannot be read off their name (`aug`, `regemb`, `mod(n)` out of a
/// quotient) take it from there.
pub fn parse_rank_fn(text: &str, ring: Option<&Ring>) -> ParseResult<MatrixRankFn> {
    whole(text, |c| {
        let start = c.mark();
        let rk = rank_fn(c, ring)?;
        match ring {
            Some(r) if r != rk.ring() => Err(c.error_at(start, format!("{} is over {}, not {r}", rk.label(), rk.ring()))),
            _ => Ok(rk),
        }
    })
}

/// A hom by name; the target is fixed by the caller.
pub fn parse_hom(text: &str, source: Option<&Ring>, target: &Ring) -> ParseResult<RingHom> {
    whole(text, |c| {
        let start = c.mark();
        let h = hom_name(c)?;
        build_hom(c, start, &h, source, target)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum HomName {
    Mod(u64),
    IncQ,
    Aug,
    RegEmb,
    Diag(usize),
}

fn hom_name(cur: &mut Cursor<'_>) -> ParseResult<HomName> {
    let start = cur.mark();
    match cur.ident()? {
        "mod" => {
            cur.expect("(")?;
            let n = cur.uint()?;
            cur.expect(")")?;
            Ok(HomName::Mod(n))
        }
        "diag" => {
            cur.expect("(")?;
            let k = cur.usize()?;
            cur.expect(")")?;
            Ok(HomName::Diag(k))
        }
        "incQ" => Ok(HomName::IncQ),
        "aug" => Ok(HomName::Aug),
        "regemb" => Ok(HomName::RegEmb),
        other => Err(cur.error_at(start, format!("unknown hom '{other}'"))),
    }
}

fn build_hom(cur: &Cursor<'_>, at: usize, h: &HomName, source: Option<&Ring>, target: &Ring) -> ParseResult<RingHom> {
    let err = |e| core_error(cur, at, e);
    let need_source = |what: &str| {
        source.cloned().ok_or_else(|| cur.error_at(at, format!("{what} needs its source ring; pass --ring")))
    };
    let hom = match h {
        HomName::Mod(n) => {
            if target.modulus() != Some(*n) {
                return Err(cur.error_at(at, format!("mod({n}) does not map onto {target}")));
            }
            match source {
                Some(s) if s.modulus().is_some() && s != target => {
                    RingHom::reduce_between_quotients(s.clone(), target.clone()).map_err(err)?
                }
                _ => RingHom::reduce_mod(target.clone()).map_err(err)?,
            }
        }
        HomName::IncQ => {
            if target != &Ring::Rationals {
                return Err(cur.error_at(at, format!("incQ maps into Q, not {target}")));
            }
            RingHom::include_integers_in_rationals()
        }
        HomName::Aug => RingHom::augmentation(need_source("aug")?).map_err(err)?,
        HomName::RegEmb => RingHom::regular_embedding(need_source("regemb")?).map_err(err)?,
        HomName::Diag(k) => match target {
            Ring::MatrixAmplification { base, k: t } if t == k => {
                RingHom::diagonal_embedding((**base).clone(), *k).map_err(err)?
            }
            _ => return Err(cur.error_at(at, format!("diag({k}) does not map into {target}"))),
        },
    };
    if hom.target() != target {
        return Err(cur.error_at(at, format!("{} maps into {}, not {target}", hom.label(), hom.target())));
    }
    if let Some(s) = source {
        if hom.source() != s {
            return Err(cur.error_at(at, format!("{} starts at {}, not {s}", hom.label(), hom.source())));
        }
    }
    Ok(hom)
}

fn rank_fn(cur: &mut Cursor<'_>, expected: Option<&Ring>) -> ParseResult<MatrixRankFn> {
    let start = cur.mark();
    let name = cur.ident()?;
    let err = |c: &Cursor<'_>, e| core_error(c, start, e);
    match name {
        "rkQ" => rk_field(&Ring::Rationals).map_err(|e| err(cur, e)),
        "rkFp" => {
            cur.expect("(")?;
            let at = cur.mark();
            let p = cur.uint()?;
            cur.expect(")")?;
            let f = Ring::prime_field(p).map_err(|e| core_error(cur, at, e))?;
            rk_field(&f).map_err(|e| err(cur, e))
        }
        "rkZmodPk" => {
            cur.expect("(")?;
            let p = cur.uint()?;
            cur.expect(",")?;
            let at = cur.mark();
            let k = cur.uint()?;
            cur.expect(")")?;
            let k = u32::try_from(k).map_err(|_| cur.error_at(at, "exponent too large"))?;
            rk_zmod_pk(p, k).map_err(|e| err(cur, e))
        }
        "vN" => {
            cur.expect("(")?;
            let field = ring(cur)?;
            cur.expect(",")?;
            let g = group(cur)?;
            cur.expect(")")?;
            rk_group_vn(&field, &g).map_err(|e| err(cur, e))
        }
        "pullback" => {
            cur.expect("(")?;
            let hom_at = cur.mark();
            cur.skip_ws();
            let h = hom_name(cur)?;
            cur.expect(",")?;
            let inner = rank_fn(cur, None)?;
            cur.expect(")")?;
            let hom = build_hom(cur, hom_at, &h, expected, inner.ring())?;
            rk_pullback(&hom, &inner).map_err(|e| err(cur, e))
        }
        "convex" => {
            cur.expect("(")?;
            let mut parts = Vec::new();
            loop {
                let w = cur.rational()?;
                cur.expect("*")?;
                parts.push((w, rank_fn(cur, expected)?));
                if !cur.eat("+") {
                    break;
                }
            }
            cur.expect(")")?;
            rk_convex(&parts).map_err(|e| err(cur, e))
        }
        "morita" => {
            cur.expect("(")?;
            let inner_ring = match expected {
                Some(Ring::MatrixAmplification { base, .. }) => Some(&**base),
                _ => None,
            };
            let inner = rank_fn(cur, inner_ring)?;
            cur.expect(",")?;
            let k = cur.usize()?;
            cur.expect(")")?;
            rk_morita(&inner, k).map_err(|e| err(cur, e))
        }
        other => Err(cur.error_at(start, format!("unknown rank function '{other}'"))),
    }
}

/// `Z->Zmod(n)`, `Z->Fp(p)` or `aug:<group ring>` (e.g. `aug:Q[C3]`).
pub fn parse_epi(text: &str) -> ParseResult<RModuleStructureOnS> {
    whole(text, |cur| {
        let start = cur.mark();
        if cur.eat("aug") {
            cur.expect(":")?;
            let at = cur.mark();
            let r = ring(cur)?;
            return RModuleStructureOnS::augmentation(&r).map_err(|e| core_error(cur, at, e));
        }
        let source = ring(cur)?;
        if source != Ring::Integers {
            return Err(cur.error_at(start, format!("quotient epimorphisms start at Z, not {source}")));
        }
        cur.expect("->")?;
        let at = cur.mark();
        let target = ring(cur)?;
        RModuleStructureOnS::quotient_of_integers(&target).map_err(|e| core_error(cur, at, e))
    })
}

/// `<ring>;mul:<f>;T=<horizon>`, where `f` is a scalar or a bracketed
/// matrix `[a,b|c,d]`. The system is `R^n -> R^n -> ...` with every
/// transition `x |-> xf`.
pub fn parse_system(text: &str) -> ParseResult<DirectedSystem> {
    whole(text, |cur| {
        let r = ring(cur)?;
        cur.expect(";")?;
        cur.expect("mul")?;
        cur.expect(":")?;
        let f_at = cur.mark();
        let f = if cur.eat("[") {
            let m = matrix(cur, &r, '|', Some(']'))?;
            cur.expect("]")?;
            m
        } else {
            let s = scalar(cur, &r)?;
            Matrix::new(r.clone(), 1, 1, vec![s]).map_err(|e| core_error(cur, f_at, e))?
        };
        cur.expect(";")?;
        cur.expect("T")?;
        cur.expect("=")?;
        let t_at = cur.mark();
        let horizon = cur.usize()?;
        DirectedSystem::multiplication(&f, horizon).map_err(|e| core_error(cur, t_at, e))
    })
}
