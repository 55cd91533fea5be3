use std::fmt;
use std::sync::Arc;

use super::bott::{bsu_restriction_coefficient, bu6_generator_image};
use super::spaces::{SpaceModel, SpacePresentation};
use crate::error::{Error, Result};
use crate::graded_poly::{check_ring, Generator, GradedPolynomial, Monomial};
use crate::scalar::Coefficient;
use crate::symmetric::power_sum_s;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    /// Images sit `shift` degrees above their generator (maps on homology).
    Pushforward,
    /// Images sit `shift` degrees below their generator (maps on cohomology).
    Pullback,
}

type ImageRule<C> = Arc<dyn Fn(Generator) -> Result<GradedPolynomial<C>> + Send + Sync>;

/// A degree-shifting map that is linear on generators and sends every
/// product of positive-degree elements, and the unit, to zero.
///
/// It is a map of indecomposable quotients, not a ring map. Generator
/// images come from a rule so that infinitely generated sources stay lazy;
/// every image is degree-checked when it is produced.
#[derive(Clone)]
pub struct GeneratorMap<C> {
    source: SpacePresentation,
    target: SpacePresentation,
    shift: u32,
    variance: Variance,
    images: ImageRule<C>,
}

impl<C> fmt::Debug for GeneratorMap<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorMap")
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("shift", &self.shift)
            .field("variance", &self.variance)
            .finish()
    }
}

impl<C: Coefficient> GeneratorMap<C> {
    pub fn new<F>(source: SpaceModel, target: SpaceModel, shift: u32, variance: Variance, images: F) -> Self
    where
        F: Fn(Generator) -> Result<GradedPolynomial<C>> + Send + Sync + 'static,
    {
        GeneratorMap {
            source: SpacePresentation::new(source),
            target: SpacePresentation::new(target),
            shift,
            variance,
            images: Arc::new(images),
        }
    }

    pub fn source(&self) -> &SpacePresentation {
        &self.source
    }

    pub fn target(&self) -> &SpacePresentation {
        &self.target
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn kills_decomposables(&self) -> bool {
        true
    }

    /// Degree an image of a degree-`d` element must have, if any.
    pub fn target_degree(&self, d: u32) -> Option<u32> {
        match self.variance {
            Variance::Pushforward => Some(d + self.shift),
            Variance::Pullback => d.checked_sub(self.shift),
        }
    }

    pub fn image(&self, g: Generator) -> Result<GradedPolynomial<C>> {
        let ring = self.source.ring();
        if !ring.contains(g) {
            return Err(Error::UnknownGenerator {
                symbol: format!("{g:?}"),
                ring: ring.name().to_string(),
            });
        }
        let img = (self.images)(g)?;
        check_ring(self.target.ring(), img.ring())?;
        if img.is_zero() {
            return Ok(img);
        }
        let expected = self.target_degree(ring.degree(g));
        match (expected, img.homogeneous_degree()) {
            (Some(e), Some(found)) if e == found => Ok(img),
            (_, None) => Err(Error::NotHomogeneous),
            (e, Some(found)) => Err(Error::DegreeMismatch {
                expected: e.map_or(-1, i64::from),
                found: found.into(),
            }),
        }
    }

    pub fn apply(&self, p: &GradedPolynomial<C>) -> Result<GradedPolynomial<C>> {
        check_ring(self.source.ring(), p.ring())?;
        let mut out = GradedPolynomial::zero(self.target.ring());
        for (m, c) in p.terms() {
            if let Some(g) = m.as_generator() {
                out = out.try_add(&self.image(g)?.scale(c))?;
            }
        }
        Ok(out)
    }
}

/// `B_*` (iterate 1) or `B_*^2` (iterate 2) on `H_*(BU)`:
/// `b_m ↦ (-1)^m s_{m+1}` and `b_m ↦ (-1)^{m+1} (m+1) s_{m+2}`.
pub fn bott_map<C: Coefficient>(iterate: u32) -> Result<GeneratorMap<C>> {
    let rule: fn(Generator) -> Result<GradedPolynomial<C>> = match iterate {
        1 => |g| {
            let m = g.index();
            Ok(power_sum_s::<C>(m + 1)?.scale(&C::sign_power(m.into())))
        },
        2 => |g| {
            let m = g.index();
            let k = C::sign_power(u64::from(m) + 1) * C::from_int(i64::from(m) + 1);
            Ok(power_sum_s::<C>(m + 2)?.scale(&k))
        },
        _ => {
            return Err(Error::InvalidArgument(format!(
                "Bott iterate must be 1 or 2, got {iterate}"
            )))
        }
    };
    Ok(GeneratorMap::new(
        SpaceModel::BuHomology,
        SpaceModel::BuHomology,
        2 * iterate,
        Variance::Pushforward,
        rule,
    ))
}

fn x_power<C: Coefficient>(coefficient: C, power: u32) -> GradedPolynomial<C> {
    let ring = SpaceModel::Bu1.ring();
    let x = ring.generator("x").expect("x");
    let m = Monomial::power(&ring, x, power);
    GradedPolynomial::term(&ring, m, coefficient)
}

/// `H^{*+2}(BSU) -> H^*(BU(1))`, with the image of `c_{m+1}` recomputed
/// through the Bott pushforward and the Chern pairing.
pub fn bsu_to_bu1<C: Coefficient>() -> GeneratorMap<C> {
    GeneratorMap::new(SpaceModel::Bsu, SpaceModel::Bu1, 2, Variance::Pullback, |g| {
        let m = g.index() - 1;
        Ok(x_power(bsu_restriction_coefficient::<C>(m)?, m))
    })
}

/// `H^{*+4}(BU<6>) -> H^*(BU(1))`, `y_{m+2} ↦ coefficient * x^m`.
pub fn bu6_to_bu1<C: Coefficient>() -> GeneratorMap<C> {
    GeneratorMap::new(SpaceModel::Bu6, SpaceModel::Bu1, 4, Variance::Pullback, |g| {
        let image = bu6_generator_image::<C>(g.index() - 2)?;
        Ok(x_power(image.coefficient, image.power))
    })
}
