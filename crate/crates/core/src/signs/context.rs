use alloc::vec;
use alloc::vec::Vec;

use crate::curves::{kernel_translate, TwoIsogeny, WeierstrassModel};
use crate::error::{Error, Result};
use crate::padic::{factor_over, Embedding, LocalElement, LocalField};

/// A non-trivial 2-torsion point standing for its Galois orbit, over the
/// field `K(P)` it generates.
#[derive(Clone, Debug)]
pub struct OrbitRep {
    pub field: LocalField,
    /// `K → K(P)`.
    pub embedding: Embedding,
    /// `x(P)` on the simplified model.
    pub root: LocalElement,
    /// `E → E/⟨P⟩` after moving `P` to `(0, 0)`; carries `(a_P, b_P)`.
    pub isogeny: TwoIsogeny<LocalElement>,
}

/// `F = K(E[2])` with all three roots of the 2-division cubic in it.
#[derive(Clone, Debug)]
pub struct SplittingField {
    pub field: LocalField,
    pub embedding: Embedding,
    /// The image of each orbit representative comes first, in `reps` order.
    pub roots: [LocalElement; 3],
}

/// The 2-torsion of `E/K` laid out orbit by orbit.
#[derive(Clone, Debug)]
pub struct IsogenyContext {
    pub base: LocalField,
    /// Simplified model `y² = x³ + Ax² + Bx + C` over `K`.
    pub model: WeierstrassModel<LocalElement>,
    /// `[A, B, C]`.
    pub cubic: [LocalElement; 3],
    pub d: usize,
    pub reps: Vec<OrbitRep>,
    pub splitting: SplittingField,
    /// `K(√Δ)` when `d` is even.
    pub quadratic: Option<(LocalField, Embedding)>,
}

impl IsogenyContext {
    pub fn model_over(&self, emb: &Embedding) -> WeierstrassModel<LocalElement> {
        self.model.map(|c| emb.apply(c))
    }

    /// The 2-isogeny with kernel generated by the point with x-coordinate
    /// `root`, which must lie in the target of `emb`.
    pub fn isogeny_over(&self, emb: &Embedding, root: &LocalElement) -> Result<TwoIsogeny<LocalElement>> {
        let cubic = self.cubic.clone().map(|c| emb.apply(&c));
        let (a, b) = kernel_translate(&cubic, root)?;
        TwoIsogeny::new(a, b)
    }
}

/// Factor the 2-division cubic of `model` over its field and build every
/// field the 2-isogeny formulas need.
pub fn isogeny_context(model: &WeierstrassModel<LocalElement>) -> Result<IsogenyContext> {
    let k = model.a1.field().clone();
    let simple = model.simplified()?;
    let cubic = simple.two_division_cubic()?;
    let [a, b, c] = cubic.clone();
    let mut comps = factor_over(&k, &[c, b.clone(), a.clone(), k.one()])?;
    comps.sort_by_key(|c| c.degree());
    let degrees: Vec<usize> = comps.iter().map(|c| c.degree()).collect();
    let mut ctx = IsogenyContext {
        base: k.clone(),
        model: simple,
        cubic,
        d: 0,
        reps: Vec::new(),
        splitting: SplittingField { field: k.clone(), embedding: Embedding::identity(&k), roots: [k.zero(), k.zero(), k.zero()] },
        quadratic: None,
    };
    let rep = |ctx: &IsogenyContext, field: &LocalField, embedding: &Embedding, root: &LocalElement| -> Result<OrbitRep> {
        Ok(OrbitRep { field: field.clone(), embedding: embedding.clone(), root: root.clone(), isogeny: ctx.isogeny_over(embedding, root)? })
    };
    match degrees.as_slice() {
        [1, 1, 1] => {
            ctx.d = 1;
            for comp in &comps {
                let r = rep(&ctx, &k, &Embedding::identity(&k), &comp.root)?;
                ctx.reps.push(r);
            }
            ctx.splitting.roots = [comps[0].root.clone(), comps[1].root.clone(), comps[2].root.clone()];
        }
        [1, 2] => {
            ctx.d = 2;
            let (lin, quad) = (&comps[0], &comps[1]);
            let r0 = rep(&ctx, &k, &Embedding::identity(&k), &lin.root)?;
            let r1 = rep(&ctx, &quad.field, &quad.embedding, &quad.root)?;
            ctx.reps = vec![r0, r1];
            let e = &quad.embedding;
            let r0f = e.apply(&lin.root);
            let r2 = e.apply(&a).add(&r0f).add(&quad.root).neg();
            ctx.splitting = SplittingField { field: quad.field.clone(), embedding: e.clone(), roots: [r0f, quad.root.clone(), r2] };
            ctx.quadratic = Some((quad.field.clone(), e.clone()));
        }
        [3] => {
            let cub = &comps[0];
            let (lf, le, r) = (&cub.field, &cub.embedding, &cub.root);
            let rep0 = rep(&ctx, lf, le, r)?;
            ctx.reps = vec![rep0];
            // x³ + Ax² + Bx + C = (x − r)(x² + sx + t) over K(r).
            let s = le.apply(&a).add(r);
            let t = le.apply(&b).add(&r.mul(&s));
            let rest = factor_over(lf, &[t, s.clone(), lf.one()])?;
            if rest.len() == 2 {
                ctx.d = 3;
                ctx.splitting = SplittingField {
                    field: lf.clone(),
                    embedding: le.clone(),
                    roots: [r.clone(), rest[0].root.clone(), rest[1].root.clone()],
                };
            } else {
                ctx.d = 6;
                let q = &rest[0];
                let emb = le.then(&q.embedding);
                let other = q.embedding.apply(&s).add(&q.root).neg();
                ctx.splitting =
                    SplittingField { field: q.field.clone(), embedding: emb, roots: [q.embedding.apply(r), q.root.clone(), other] };
                let disc = ctx.model.discriminant();
                let m = factor_over(&k, &[disc.neg(), k.zero(), k.one()])?;
                if m.len() != 1 {
                    return Err(Error::PrecisionExhausted("discriminant square class inconsistent with the Galois type"));
                }
                ctx.quadratic = Some((m[0].field.clone(), m[0].embedding.clone()));
            }
        }
        _ => return Err(Error::PrecisionExhausted("2-division cubic factored inconsistently")),
    }
    Ok(ctx)
}
