use num_rational::BigRational;

use super::context::Ctx;
use super::polynomial::Polynomial;
use super::ring::CoefficientRing;
use super::PolyError;

/// Ring homomorphism defined by the images of the source variables.
///
/// Coefficients are carried into `target_ring`, so a map with identity images
/// and `target_ring = Z/3` is reduction mod 3.
#[derive(Clone, Debug, PartialEq)]
pub struct RingMap {
    source: Ctx,
    target: Ctx,
    target_ring: CoefficientRing,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(
        source: &Ctx,
        target: &Ctx,
        target_ring: &CoefficientRing,
        images: Vec<Polynomial>,
    ) -> Result<Self, PolyError> {
        if images.len() != source.arity() {
            return Err(PolyError::ArityMismatch {
                expected: source.arity(),
                found: images.len(),
            });
        }
        let mut checked = Vec::with_capacity(images.len());
        for img in images {
            if img.variable_context() != &**target {
                return Err(PolyError::ContextMismatch);
            }
            checked.push(img.with_context(target)?.change_ring(target_ring)?);
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            target_ring: target_ring.clone(),
            images: checked,
        })
    }

    /// Images given as text in the target context, one per source variable.
    pub fn from_text(
        source: &Ctx,
        target: &Ctx,
        target_ring: &CoefficientRing,
        images: &[&str],
    ) -> Result<Self, PolyError> {
        let polys = images
            .iter()
            .map(|t| Polynomial::parse(target, target_ring, t))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, target_ring, polys)
    }

    pub fn identity(ctx: &Ctx, ring: &CoefficientRing) -> Self {
        let images = (0..ctx.arity())
            .map(|i| Polynomial::var_at(ctx, ring, i))
            .collect();
        RingMap {
            source: ctx.clone(),
            target: ctx.clone(),
            target_ring: ring.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn target_ring(&self) -> &CoefficientRing {
        &self.target_ring
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// True when each image is homogeneous of its source variable's weight.
    pub fn is_graded(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| img.is_homogeneous_of(self.source.weight(i)))
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        substitute(p, self)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingMap) -> Result<RingMap, PolyError> {
        let images = self
            .images
            .iter()
            .map(|img| other.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        RingMap::new(&self.source, &other.target, &other.target_ring, images)
    }
}

/// Image of `p` under `m`.
pub fn substitute(p: &Polynomial, m: &RingMap) -> Result<Polynomial, PolyError> {
    if p.variable_context() != &*m.source {
        return Err(PolyError::ContextMismatch);
    }
    let n = m.source.arity();
    // cache of powers per variable
    let mut powers: Vec<Vec<Polynomial>> = (0..n)
        .map(|_| vec![Polynomial::one(&m.target, &m.target_ring)])
        .collect();
    let mut out = Polynomial::zero(&m.target, &m.target_ring);
    for (mono, c) in p.terms() {
        let c: BigRational = m.target_ring.normalize(c.clone())?;
        let mut term = Polynomial::monomial(
            &m.target,
            &m.target_ring,
            super::Monomial::one(&m.target),
            c,
        );
        for (i, &e) in mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut powers[i];
            while cache.len() <= e as usize {
                let next = &cache[cache.len() - 1] * &m.images[i];
                cache.push(next);
            }
            term = &term * &cache[e as usize];
        }
        out = &out + &term;
    }
    Ok(out)
}
