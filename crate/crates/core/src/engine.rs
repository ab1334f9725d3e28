//! Signature-based Gröbner basis engine with the Syzygy and Rewritten
//! criteria.
//!
//! The engine keeps every element it creates, including those whose
//! polynomial reduced to zero: they never act as reducers or enter pairs,
//! but they remain valid rewriters. Pairs are processed by increasing
//! signature and each S-polynomial is F5-reduced under its signature before
//! being appended with a fresh stamp. On termination every critical pair of
//! the result is F5-divisible or F5-rewritable, which makes the nonzero
//! elements a signature-labeled Gröbner basis.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::labeled::{LabeledBasis, SigLabeledPoly};
use crate::module::{ModuleMonomial, ModuleVector};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// Regularity class of a critical pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regularity {
    /// The leading terms of the scaled cofactor vectors cancel.
    NonRegular,
    /// Equal scaled signatures without cancellation.
    SuperRegular,
    /// `tf·sig(f) ≻ tg·sig(g)`.
    Regular,
}

/// `(tf, f, tg, g)` with `tf·lpp(f) = tg·lpp(g) = lcm`, oriented so that
/// `tf·sig(f) ≻ tg·sig(g)`, or the two are equal and `g` is the later element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub tf: Monomial,
    pub f: usize,
    pub tg: Monomial,
    pub g: usize,
    /// `tf·sig(f)`, the signature of the S-polynomial.
    pub sig: ModuleMonomial,
    /// `tg·sig(g)`.
    pub g_sig: ModuleMonomial,
}

impl CriticalPair {
    /// Whether the scaled signatures differ, which makes the pair regular
    /// whatever the hidden vectors are.
    pub fn is_regular(&self) -> bool {
        self.sig != self.g_sig
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    SyzygySkip,
    RewriteSkip,
    ReducedToZero,
    NewElement,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::SyzygySkip => "syzygy-skip",
            Verdict::RewriteSkip => "rewrite-skip",
            Verdict::ReducedToZero => "reduced-to-zero",
            Verdict::NewElement => "new-element",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub sig: ModuleMonomial,
    pub f: usize,
    pub g: usize,
    pub verdict: Verdict,
}

impl TraceEntry {
    pub fn render(&self, ring: &Ring) -> String {
        format!(
            "{} ({}, {}) {}",
            self.sig.render(ring),
            self.f,
            self.g,
            self.verdict.as_str()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Track a cofactor vector next to every element and check admissibility
    /// after every reduction step.
    pub instrument: bool,
    /// Record one [`TraceEntry`] per processed pair.
    pub trace: bool,
    /// Abort after this many processed pairs.
    pub max_pairs: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            instrument: false,
            trace: false,
            max_pairs: 1_000_000,
        }
    }
}

/// The engine's working set. Element `i` carries stamp `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    elements: Vec<SigLabeledPoly>,
    nonzero: Vec<usize>,
    shadows: Option<Vec<ModuleVector>>,
}

impl EngineBasis {
    fn new(ring: Ring, generators: Vec<Polynomial>, instrument: bool) -> Self {
        EngineBasis {
            ring,
            generators,
            elements: Vec::new(),
            nonzero: Vec::new(),
            shadows: instrument.then(Vec::new),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// All elements in stamp order, zero polynomials included.
    pub fn elements(&self) -> &[SigLabeledPoly] {
        &self.elements
    }

    /// Stamps of the elements with nonzero polynomial part.
    pub fn nonzero_view(&self) -> &[usize] {
        &self.nonzero
    }

    /// Cofactor vectors, present for instrumented runs.
    pub fn shadows(&self) -> Option<&[ModuleVector]> {
        self.shadows.as_deref()
    }

    pub fn is_instrumented(&self) -> bool {
        self.shadows.is_some()
    }

    fn push(
        &mut self,
        poly: Polynomial,
        sig: ModuleMonomial,
        shadow: Option<ModuleVector>,
    ) -> usize {
        let stamp = self.elements.len();
        if !poly.is_zero() {
            self.nonzero.push(stamp);
        }
        self.elements.push(SigLabeledPoly { poly, sig, stamp });
        if let (Some(shadows), Some(v)) = (self.shadows.as_mut(), shadow) {
            shadows.push(v);
        }
        stamp
    }

    /// Syzygy criterion: `t·el` is F5-divisible when some nonzero element
    /// with a strictly smaller unit vector has `lpp` dividing `t·x^α`.
    pub fn f5_divisible(&self, t: &Monomial, el: &SigLabeledPoly) -> bool {
        let target = el.sig.mono.mul(t);
        self.nonzero.iter().any(|&k| {
            let g = &self.elements[k];
            g.sig.index > el.sig.index && g.poly.lpp().is_some_and(|l| l.divides(&target))
        })
    }

    /// Rewritten criterion: `t·el` is F5-rewritable when an element added
    /// after `el`, on the same unit vector, has a signature dividing `t·sig(el)`.
    /// Zero elements count.
    pub fn f5_rewritable(&self, t: &Monomial, el: &SigLabeledPoly) -> bool {
        self.rewriter(t, el).is_some()
    }

    /// The latest element that rewrites `t·el`, if any.
    pub fn rewriter(&self, t: &Monomial, el: &SigLabeledPoly) -> Option<usize> {
        let target = el.sig.mul_mono(t);
        self.elements[el.stamp + 1..]
            .iter()
            .rev()
            .find(|g| g.sig.divides(&target))
            .map(|g| g.stamp)
    }

    /// Builds the critical pair of two nonzero elements.
    pub fn make_pair(&self, a: &SigLabeledPoly, b: &SigLabeledPoly) -> Result<CriticalPair> {
        let (Some(la), Some(lb)) = (a.poly.lpp(), b.poly.lpp()) else {
            return Err(Error::ZeroPair);
        };
        if a.stamp == b.stamp {
            return Err(Error::InvalidInput(
                "critical pair of an element with itself".into(),
            ));
        }
        let lcm = la.lcm(lb);
        let ta = lcm.div_unchecked(la);
        let tb = lcm.div_unchecked(lb);
        let sa = a.sig.mul_mono(&ta);
        let sb = b.sig.mul_mono(&tb);
        let a_first = match self.ring.cmp_module(&sa, &sb) {
            Ordering::Greater => true,
            Ordering::Less => false,
            // equal signatures: g is the later element
            Ordering::Equal => a.stamp < b.stamp,
        };
        Ok(if a_first {
            CriticalPair {
                tf: ta,
                f: a.stamp,
                tg: tb,
                g: b.stamp,
                sig: sa,
                g_sig: sb,
            }
        } else {
            CriticalPair {
                tf: tb,
                f: b.stamp,
                tg: ta,
                g: a.stamp,
                sig: sb,
                g_sig: sa,
            }
        })
    }

    /// A pair is F5-divisible when either scaled side is.
    pub fn pair_divisible(&self, p: &CriticalPair) -> bool {
        self.f5_divisible(&p.tf, &self.elements[p.f])
            || self.f5_divisible(&p.tg, &self.elements[p.g])
    }

    pub fn pair_rewritable(&self, p: &CriticalPair) -> bool {
        self.f5_rewritable(&p.tf, &self.elements[p.f])
            || self.f5_rewritable(&p.tg, &self.elements[p.g])
    }

    /// Three-way classification using the tracked cofactor vectors.
    pub fn classify_pair(&self, p: &CriticalPair) -> Result<Regularity> {
        let shadows = self.shadows.as_ref().ok_or(Error::Uninstrumented)?;
        let f = &self.elements[p.f].poly;
        let g = &self.elements[p.g].poly;
        let c = f
            .lc()
            .ok_or(Error::ZeroPair)?
            .div(g.lc().ok_or(Error::ZeroPair)?);
        let w = shadows[p.f]
            .scale_term(&self.ring.coeff(1), &p.tf)
            .sub_mul_term(&c, &p.tg, &shadows[p.g], &self.ring);
        let scaled_f = shadows[p.f].lpp().map(|s| s.mul_mono(&p.tf));
        Ok(if w.lpp() != scaled_f {
            Regularity::NonRegular
        } else if p.is_regular() {
            Regularity::Regular
        } else {
            Regularity::SuperRegular
        })
    }

    /// Every critical pair among the nonzero elements.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let mut pairs = Vec::new();
        for (j, &b) in self.nonzero.iter().enumerate() {
            for &a in &self.nonzero[..j] {
                pairs.push(
                    self.make_pair(&self.elements[a], &self.elements[b])
                        .expect("nonzero elements"),
                );
            }
        }
        pairs
    }

    /// Critical pairs that are neither F5-divisible nor F5-rewritable. Empty
    /// for a finished run.
    pub fn unsettled_pairs(&self) -> Vec<CriticalPair> {
        self.critical_pairs()
            .into_iter()
            .filter(|p| !self.pair_divisible(p) && !self.pair_rewritable(p))
            .collect()
    }

    /// Whether `f_i^(e_i)` are the first `m` elements, in order.
    pub fn generators_first(&self) -> bool {
        self.generators.len() <= self.elements.len()
            && self.generators.iter().enumerate().all(|(i, f)| {
                let el = &self.elements[i];
                el.poly == *f && el.sig == ModuleMonomial::unit(&self.ring, i)
            })
    }

    /// F5-reduces `poly` under signature `sig` (top reductions only).
    pub fn f5_reduce(&self, poly: Polynomial, sig: &ModuleMonomial) -> SigLabeledPoly {
        let (poly, _) = self
            .reduce_tracked(poly, sig, None, &mut |_, _| Ok(()))
            .expect("no checks");
        SigLabeledPoly {
            poly,
            sig: sig.clone(),
            stamp: self.elements.len(),
        }
    }

    fn find_reducer(&self, lh: &Monomial, sig: &ModuleMonomial) -> Option<(usize, Monomial)> {
        self.nonzero.iter().find_map(|&k| {
            let g = &self.elements[k];
            let lg = g.poly.lpp()?;
            if !lg.divides(lh) {
                return None;
            }
            let t = lh.div_unchecked(lg);
            let ok = self.ring.cmp_module(sig, &g.sig.mul_mono(&t)) == Ordering::Greater
                && !self.f5_divisible(&t, g)
                && !self.f5_rewritable(&t, g);
            ok.then_some((k, t))
        })
    }

    fn reduce_tracked(
        &self,
        mut h: Polynomial,
        sig: &ModuleMonomial,
        mut shadow: Option<ModuleVector>,
        check: &mut dyn FnMut(&Polynomial, Option<&ModuleVector>) -> Result<()>,
    ) -> Result<(Polynomial, Option<ModuleVector>)> {
        while let Some(lh) = h.lpp().cloned() {
            let Some((k, t)) = self.find_reducer(&lh, sig) else {
                break;
            };
            let g = &self.elements[k];
            let c = h.lc().unwrap().div(g.poly.lc().unwrap());
            h = h.sub_mul_term(&c, &t, &g.poly, &self.ring);
            if let (Some(v), Some(shadows)) = (shadow.as_mut(), self.shadows.as_ref()) {
                *v = v.sub_mul_term(&c, &t, &shadows[k], &self.ring);
            }
            check(&h, shadow.as_ref())?;
        }
        Ok((h, shadow))
    }

    /// The nonzero elements as a signature-labeled basis, keeping stamps.
    pub fn signature_basis(&self) -> LabeledBasis<SigLabeledPoly> {
        LabeledBasis::new(
            self.generators.clone(),
            self.nonzero
                .iter()
                .map(|&k| self.elements[k].clone())
                .collect(),
        )
    }

    /// Polynomial parts of the nonzero elements.
    pub fn polys(&self) -> Vec<Polynomial> {
        self.nonzero
            .iter()
            .map(|&k| self.elements[k].poly.clone())
            .collect()
    }
}

/// Statistics and optional trace of one engine run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F5Run {
    pub basis: EngineBasis,
    pub trace: Vec<TraceEntry>,
    pub pairs_processed: usize,
    /// Number of admissibility checks performed (instrumented runs only).
    pub admissibility_checks: usize,
    /// Whether the processed pair signatures never decreased.
    pub signatures_monotone: bool,
}

/// Pair order: by signature, then the later `f`, then the later `g` first.
fn cmp_pairs(ring: &Ring, a: &CriticalPair, b: &CriticalPair) -> Ordering {
    ring.cmp_module(&a.sig, &b.sig)
        .then_with(|| b.f.cmp(&a.f))
        .then_with(|| b.g.cmp(&a.g))
}

/// Pending critical pairs; pops the smallest.
struct PairQueue {
    // sorted descending, so the minimum sits at the end
    pairs: Vec<CriticalPair>,
    seen: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            pairs: Vec::new(),
            seen: HashSet::new(),
        }
    }

    fn push(&mut self, ring: &Ring, p: CriticalPair) {
        let key = (p.f.min(p.g), p.f.max(p.g));
        if !self.seen.insert(key) {
            return;
        }
        let at = self
            .pairs
            .partition_point(|q| cmp_pairs(ring, q, &p) == Ordering::Greater);
        self.pairs.insert(at, p);
    }

    fn pop(&mut self) -> Option<CriticalPair> {
        self.pairs.pop()
    }
}

fn validate(gens: &[Polynomial], ring: &Ring) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::InvalidInput(
            "at least one generator is required".into(),
        ));
    }
    for (i, f) in gens.iter().enumerate() {
        if f.is_zero() {
            return Err(Error::InvalidInput(format!("generator f{} is zero", i + 1)));
        }
        if !f.is_canonical(ring) {
            return Err(Error::Context(format!(
                "generator f{} is not over {ring}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Computes a signature-labeled Gröbner basis of `⟨gens⟩`.
pub fn f5_run(ring: &Ring, gens: &[Polynomial]) -> Result<EngineBasis> {
    f5_run_with(ring, gens, EngineConfig::default()).map(|r| r.basis)
}

pub fn f5_run_with(ring: &Ring, gens: &[Polynomial], config: EngineConfig) -> Result<F5Run> {
    validate(gens, ring)?;
    let m = gens.len();
    let mut basis = EngineBasis::new(ring.clone(), gens.to_vec(), config.instrument);
    for (i, f) in gens.iter().enumerate() {
        basis.push(
            f.clone(),
            ModuleMonomial::unit(ring, i),
            Some(ModuleVector::unit(ring, m, i)),
        );
    }
    let mut queue = PairQueue::new();
    for (j, &b) in basis.nonzero.iter().enumerate() {
        for &a in &basis.nonzero[..j] {
            queue.push(
                ring,
                basis.make_pair(&basis.elements[a], &basis.elements[b])?,
            );
        }
    }

    let mut run = F5Run {
        basis,
        trace: Vec::new(),
        pairs_processed: 0,
        admissibility_checks: 0,
        signatures_monotone: true,
    };
    let mut last_sig: Option<ModuleMonomial> = None;

    while let Some(p) = queue.pop() {
        if run.pairs_processed == config.max_pairs {
            return Err(Error::PairBudget(config.max_pairs));
        }
        run.pairs_processed += 1;
        if let Some(prev) = &last_sig {
            if ring.cmp_module(prev, &p.sig) == Ordering::Greater {
                run.signatures_monotone = false;
            }
        }
        last_sig = Some(p.sig.clone());

        let basis = &run.basis;
        let verdict = if basis.pair_divisible(&p) {
            Verdict::SyzygySkip
        } else if basis.pair_rewritable(&p) {
            Verdict::RewriteSkip
        } else {
            let f = &basis.elements[p.f].poly;
            let g = &basis.elements[p.g].poly;
            let c = f.lc().unwrap().div(g.lc().unwrap());
            let one = ring.coeff(1);
            let spoly = f.mul_term(&one, &p.tf).sub_mul_term(&c, &p.tg, g, ring);
            let shadow = basis.shadows.as_ref().map(|sh| {
                sh[p.f]
                    .scale_term(&one, &p.tf)
                    .sub_mul_term(&c, &p.tg, &sh[p.g], ring)
            });
            let mut checks = 0usize;
            let mut check = |h: &Polynomial, v: Option<&ModuleVector>| -> Result<()> {
                let Some(v) = v else { return Ok(()) };
                checks += 1;
                check_admissible(h, v, &p.sig, gens, ring)
            };
            check(&spoly, shadow.as_ref())?;
            let (h, shadow) = basis.reduce_tracked(spoly, &p.sig, shadow, &mut check)?;
            run.admissibility_checks += checks;

            let (h, shadow) = match h.lc() {
                Some(lc) if !lc.is_one() => {
                    let inv = lc.inv();
                    let v = shadow.map(|v| v.scale_term(&inv, &ring.one_mono()));
                    (h.scale(&inv), v)
                }
                _ => (h, shadow),
            };
            let zero = h.is_zero();
            let stamp = run.basis.push(h, p.sig.clone(), shadow);
            if !zero {
                let new = run.basis.elements[stamp].clone();
                for &k in &run.basis.nonzero[..run.basis.nonzero.len() - 1] {
                    queue.push(ring, run.basis.make_pair(&run.basis.elements[k], &new)?);
                }
            }
            if zero {
                Verdict::ReducedToZero
            } else {
                Verdict::NewElement
            }
        };
        if config.trace {
            run.trace.push(TraceEntry {
                sig: p.sig.clone(),
                f: p.f,
                g: p.g,
                verdict,
            });
        }
    }
    Ok(run)
}

fn check_admissible(
    h: &Polynomial,
    v: &ModuleVector,
    sig: &ModuleMonomial,
    gens: &[Polynomial],
    ring: &Ring,
) -> Result<()> {
    if v.lpp().as_ref() != Some(sig) {
        return Err(Error::Admissibility {
            sig: sig.render(ring),
            detail: format!("shadow leads with {:?}", v.lpp().map(|s| s.render(ring))),
        });
    }
    if v.dot(gens, ring)? != *h {
        return Err(Error::Admissibility {
            sig: sig.render(ring),
            detail: "shadow·F differs from the polynomial".into(),
        });
    }
    Ok(())
}
