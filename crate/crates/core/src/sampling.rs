//! Deterministic random automorphisms, for checking statements that quantify
//! over all of `Aut(g)`.
//!
//! Samples are compositions of one to three generators drawn from:
//!
//! * inner automorphisms `exp(ad σ)` with `σ = (central part) + t·(nilpotent direction)`,
//! * invertible maps on the center that fix a complement `g0` (split algebras),
//! * shears `g0 -> Zg` vanishing on `[g0, g0]` (split algebras),
//! * explicit families for the built-ins.
//!
//! Every generator and every composite is checked with
//! [`is_automorphism`] before it is returned. This is a sampling, not an
//! enumeration, of the automorphism group.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, LieAlgebra};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{LinearMap, Subspace};
use crate::maps::{self, is_automorphism, BlockDecomposition, SplitData};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    Inner,
    CenterBlock,
    Shear,
    HandVerified,
    Composition,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub kind: SampleKind,
    pub map: LinearMap,
}

/// Named family of explicit automorphisms for a built-in algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    None,
    Abelian,
    Heisenberg,
    Sl2,
    So3,
    Aff1,
    CenterSl2,
    Center2Aff1,
}

impl Family {
    pub fn for_builtin(name: &str) -> Self {
        match name {
            "heisenberg3" | "h3" => Family::Heisenberg,
            "sl2" => Family::Sl2,
            "so3" => Family::So3,
            "aff1" => Family::Aff1,
            "sum_center_sl2" => Family::CenterSl2,
            "sum_center2_aff1" => Family::Center2Aff1,
            n if n.starts_with("abelian") => Family::Abelian,
            _ => Family::None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AutomorphismSampler {
    algebra: LieAlgebra,
    center: Subspace,
    nilpotent_directions: Vec<Element>,
    split: Option<SplitData>,
    /// Rows span the functionals on `g0` (reduced coordinates) that vanish on `[g0, g0]`.
    abelianization_functionals: Vec<Vec<Rational>>,
    family: Family,
}

impl AutomorphismSampler {
    pub fn new(algebra: LieAlgebra, split: Option<SplitData>, family: Family) -> Result<Self> {
        let n = algebra.dim();
        let center = algebra.center();
        let mut nilpotent_directions = Vec::new();
        for i in 0..n {
            let e = Element::basis(n, i);
            if !center.contains(e.coords()) && maps::is_ad_nilpotent(&algebra, &e)? {
                nilpotent_directions.push(e);
            }
        }
        let abelianization_functionals = match &split {
            Some(s) => {
                let derived = s.complement_algebra().derived_subalgebra();
                if derived.is_zero() {
                    Subspace::full(s.complement_dim()).basis_vectors()
                } else {
                    derived.basis().null_space()
                }
            }
            None => Vec::new(),
        };
        Ok(Self {
            algebra,
            center,
            nilpotent_directions,
            split,
            abelianization_functionals,
            family,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn split(&self) -> Option<&SplitData> {
        self.split.as_ref()
    }

    fn rng(seed: u64, index: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    /// Random `σ` with nilpotent adjoint and `exp(ad σ)`.
    pub fn inner(&self, seed: u64, index: usize) -> Result<(Element, LinearMap)> {
        let mut rng = Self::rng(seed, index);
        let sigma = self.random_nilpotent_element(&mut rng)?;
        let map = maps::exp_ad(&self.algebra, &sigma)?;
        Ok((sigma, map))
    }

    pub fn sample(&self, seed: u64, index: usize) -> Result<Sample> {
        let mut rng = Self::rng(seed, index);
        let factors = rng.gen_range(1..=3);
        let mut map = LinearMap::identity(self.algebra.dim());
        let mut kind = SampleKind::Inner;
        for _ in 0..factors {
            let (k, m) = self.generator(&mut rng)?;
            kind = k;
            map = map.compose(&m)?;
        }
        if factors > 1 {
            kind = SampleKind::Composition;
        }
        self.verified(kind, map)
    }

    pub fn samples(&self, seed: u64, count: usize, exec: Execution) -> Result<Vec<Sample>> {
        exec.map_range(count, |i| self.sample(seed, i)).into_iter().collect()
    }

    fn verified(&self, kind: SampleKind, map: LinearMap) -> Result<Sample> {
        if !is_automorphism(&self.algebra, &map)?.holds() {
            return Err(Error::Invariant(format!("sampled {kind:?} map is not an automorphism")));
        }
        Ok(Sample { kind, map })
    }

    fn generator(&self, rng: &mut ChaCha8Rng) -> Result<(SampleKind, LinearMap)> {
        let mut kinds = vec![SampleKind::Inner];
        if self.split.as_ref().is_some_and(|s| s.center_dim() > 0) {
            kinds.push(SampleKind::CenterBlock);
            if !self.abelianization_functionals.is_empty() {
                kinds.push(SampleKind::Shear);
            }
        }
        if self.family != Family::None {
            kinds.push(SampleKind::HandVerified);
        }
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let map = match kind {
            SampleKind::Inner => {
                let sigma = self.random_nilpotent_element(rng)?;
                maps::exp_ad(&self.algebra, &sigma)?
            }
            SampleKind::CenterBlock => {
                let split = self.split.as_ref().unwrap();
                let gl = random_invertible(rng, split.center_dim());
                maps::center_block_automorphism(split, &gl)?
            }
            SampleKind::Shear => self.shear(rng)?,
            SampleKind::HandVerified => self.hand_verified(rng)?,
            SampleKind::Composition => unreachable!(),
        };
        Ok((kind, map))
    }

    fn random_nilpotent_element(&self, rng: &mut ChaCha8Rng) -> Result<Element> {
        let n = self.algebra.dim();
        let mut sigma = Element::zero(n);
        for v in self.center.basis_vectors() {
            sigma = &sigma + &Element::new(v).scale(&small_rational(rng));
        }
        if self.nilpotent_directions.is_empty() {
            return Ok(sigma);
        }
        // try a combination of all nilpotent directions first
        let mut combo = Element::zero(n);
        for d in &self.nilpotent_directions {
            if rng.gen_bool(0.5) {
                combo = &combo + &d.scale(&small_rational(rng));
            }
        }
        if maps::is_ad_nilpotent(&self.algebra, &combo)? {
            return Ok(&sigma + &combo);
        }
        let d = &self.nilpotent_directions[rng.gen_range(0..self.nilpotent_directions.len())];
        Ok(&sigma + &d.scale(&small_rational(rng)))
    }

    fn shear(&self, rng: &mut ChaCha8Rng) -> Result<LinearMap> {
        let split = self.split.as_ref().unwrap();
        let (z, m) = (split.center_dim(), split.complement_dim());
        let f = &self.abelianization_functionals;
        let q = LinearMap::from_rows(f.clone(), m)?;
        let r = random_matrix(rng, z, f.len());
        split.assemble(&BlockDecomposition {
            phi11: LinearMap::identity(z),
            phi12: r.compose(&q)?,
            phi21: LinearMap::zeros(m, z),
            phi22: LinearMap::identity(m),
        })
    }

    fn hand_verified(&self, rng: &mut ChaCha8Rng) -> Result<LinearMap> {
        let n = self.algebra.dim();
        let map = match self.family {
            Family::None => LinearMap::identity(n),
            Family::Abelian => random_invertible(rng, n),
            Family::Heisenberg => heisenberg_family(rng),
            Family::Sl2 => sl2_family(rng),
            Family::So3 => so3_family(rng)?,
            Family::Aff1 => aff1_family(rng),
            Family::CenterSl2 => block_diag(&random_invertible(rng, 1), &sl2_family(rng)),
            Family::Center2Aff1 => block_diag(&random_invertible(rng, 2), &aff1_family(rng)),
        };
        Ok(map)
    }
}

/// Nonzero rational `p/q` with `|p| <= 3`, `1 <= q <= 3`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-3..=3);
        if p != 0 {
            return rational::frac(p, rng.gen_range(1..=3));
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> LinearMap {
    let mut m = LinearMap::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.6) {
                m[(i, j)] = small_rational(rng);
            }
        }
    }
    m
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> LinearMap {
    loop {
        let m = random_matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Small-integer invertible matrix, for basis changes that keep constants readable.
pub fn random_invertible_integer(rng: &mut impl Rng, n: usize) -> LinearMap {
    loop {
        let mut m = LinearMap::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = rational::int(rng.gen_range(-2..=2));
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn block_diag(a: &LinearMap, b: &LinearMap) -> LinearMap {
    let mut m = LinearMap::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    m
}

/// `x, y -> A(x, y) + central shift`, `z -> det(A) z`.
fn heisenberg_family(rng: &mut impl Rng) -> LinearMap {
    let a = random_invertible(rng, 2);
    let det = &a[(0, 0)] * &a[(1, 1)] - &a[(0, 1)] * &a[(1, 0)];
    let mut m = LinearMap::zeros(3, 3);
    m.set_block(0, 0, &a);
    m[(2, 0)] = small_rational(rng);
    m[(2, 1)] = small_rational(rng);
    m[(2, 2)] = det;
    m
}

/// Torus scalings `e -> λe, f -> f/λ`, optionally followed by the swap
/// `e <-> f, h -> -h`.
fn sl2_family(rng: &mut impl Rng) -> LinearMap {
    let lambda = small_rational(rng);
    let mut m = LinearMap::zeros(3, 3);
    m[(0, 0)] = lambda.clone();
    m[(1, 1)] = lambda.recip();
    m[(2, 2)] = rational::one();
    if rng.gen_bool(0.5) {
        let swap = LinearMap::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
        m = &swap * &m;
    }
    m
}

/// Rational rotations `(I - A)(I + A)^{-1}` for skew `A` (Cayley transform).
fn so3_family(rng: &mut impl Rng) -> Result<LinearMap> {
    let (a, b, c) = (small_rational(rng), small_rational(rng), small_rational(rng));
    let mut s = LinearMap::zeros(3, 3);
    s[(0, 1)] = a.clone();
    s[(1, 0)] = -a;
    s[(0, 2)] = b.clone();
    s[(2, 0)] = -b;
    s[(1, 2)] = c.clone();
    s[(2, 1)] = -c;
    let id = LinearMap::identity(3);
    (&id - &s).compose(&(&id + &s).inverse()?)
}

/// `a -> a + βb`, `b -> αb`.
fn aff1_family(rng: &mut impl Rng) -> LinearMap {
    let mut m = LinearMap::zeros(2, 2);
    m[(0, 0)] = rational::one();
    m[(1, 0)] = if rng.gen_bool(0.8) { small_rational(rng) } else { rational::zero() };
    m[(1, 1)] = small_rational(rng);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::split_check;
    use crate::registry;

    fn sampler(name: &str) -> AutomorphismSampler {
        let g = registry::get(name).unwrap();
        let split = split_check(&g).unwrap().split().cloned();
        AutomorphismSampler::new(g, split, Family::for_builtin(name)).unwrap()
    }

    #[test]
    fn samples_are_automorphisms() {
        for name in ["heisenberg3", "sl2", "so3", "aff1", "sum_center_sl2", "sum_center2_aff1", "abelian_3"] {
            let s = sampler(name);
            for smp in s.samples(7, 20, Execution::Sequential).unwrap() {
                assert!(is_automorphism(s.algebra(), &smp.map).unwrap().holds(), "{name}");
            }
        }
    }

    #[test]
    fn deterministic_across_policies() {
        let s = sampler("sum_center2_aff1");
        assert_eq!(
            s.samples(3, 30, Execution::Sequential).unwrap(),
            s.samples(3, 30, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn inner_sigma_is_nilpotent() {
        let s = sampler("sum_center_sl2");
        for i in 0..20 {
            let (sigma, _) = s.inner(11, i).unwrap();
            assert!(maps::is_ad_nilpotent(s.algebra(), &sigma).unwrap());
        }
    }
}
