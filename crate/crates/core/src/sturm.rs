//! Sturm chains and real-rootedness certificates.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::BigInt;
use crate::poly::{sign_of, IntPolynomial};
use crate::{Error, Result};

/// Signed remainder sequence of a squarefree polynomial, each entry reduced
/// to its primitive part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Chain of the squarefree part of `p`.
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let chain = Self::signed_remainders(&p.primitive_part());
        if chain.is_squarefree_input() {
            return Ok(chain);
        }
        Ok(Self::signed_remainders(&p.squarefree_part()))
    }

    /// `p, p', -rem(p, p'), ...` up to positive scaling, ending at a
    /// multiple of `gcd(p, p')`.
    fn signed_remainders(p: &IntPolynomial) -> Self {
        let dp = p.derivative();
        if dp.is_zero() {
            return Self {
                polys: vec![p.clone()],
            };
        }
        let mut polys = vec![p.clone(), dp];
        loop {
            let n = polys.len();
            let r = polys[n - 2].positive_pseudo_rem(&polys[n - 1]);
            if r.is_zero() {
                break;
            }
            let c = r.content();
            polys.push(IntPolynomial::new(r.coeffs().iter().map(|a| -(a / &c)).collect()));
        }
        Self { polys }
    }

    /// The last entry is a constant exactly when the first is squarefree.
    pub fn is_squarefree_input(&self) -> bool {
        self.polys.last().and_then(IntPolynomial::degree) == Some(0)
            || self.polys.len() == 1
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at(x.numer(), x.denom())))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| sign_of(p.leading().unwrap())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| {
            let s = sign_of(p.leading().unwrap());
            if p.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct real roots on the whole line.
    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    Ok(SturmChain::new(p)?.count_in(lo, hi))
}

/// Lower end of a root window `lo < x <= 0` or `lo <= x <= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWindow {
    pub lower: BigRational,
    pub lower_closed: bool,
}

impl RootWindow {
    /// `(-1, 0]`, the window of the r-Fubini polynomials.
    pub fn unit() -> Self {
        Self {
            lower: BigRational::from_integer(BigInt::from(-1)),
            lower_closed: false,
        }
    }

    /// `[-m, 0]`.
    pub fn closed_to(m: u32) -> Self {
        Self {
            lower: BigRational::from_integer(-BigInt::from(m)),
            lower_closed: true,
        }
    }
}

impl fmt::Display for RootWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bracket = if self.lower_closed { '[' } else { '(' };
        write!(f, "{bracket}{}, 0]", self.lower)
    }
}

/// Real-rootedness verdict for a polynomial whose roots should all lie in a
/// [`RootWindow`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCertificate {
    pub degree: usize,
    /// Multiplicity of the root `x = 0`.
    pub zero_root_multiplicity: usize,
    /// Distinct nonzero complex roots.
    pub distinct_nonzero_roots: usize,
    /// Distinct nonzero real roots inside the window.
    pub distinct_in_interval: usize,
    /// Real roots counted with multiplicity, including the zero root.
    pub real_roots_with_multiplicity: usize,
    pub certified: bool,
}

/// Certifies that every root of `p` is real and lies in `(-1, 0]`.
pub fn certify_real_rooted_in_interval(p: &IntPolynomial) -> Result<RootCertificate> {
    certify_real_rooted_in(p, &RootWindow::unit())
}

/// Certifies that every root of `p` is real and lies in `window`.
///
/// The factor `x^j` is split off first. The rest is decomposed into
/// squarefree factors; each factor's real roots on the line and inside the
/// window are counted by its own Sturm chain.
pub fn certify_real_rooted_in(p: &IntPolynomial, window: &RootWindow) -> Result<RootCertificate> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    let (zero_mult, rest) = p.strip_zero_root();
    let zero = BigRational::zero();
    let lo = &window.lower;

    let mut distinct_nonzero = 0;
    let mut distinct_in_interval = 0;
    let mut real_with_mult = zero_mult;
    let mut all_real_distinct = 0;
    let mut tally = |i: usize, factor: &IntPolynomial, chain: &SturmChain| {
        let real = chain.count_real();
        distinct_nonzero += factor.degree().unwrap();
        all_real_distinct += real;
        real_with_mult += (i + 1) * real;
        distinct_in_interval += chain.count_in(lo, &zero);
        if window.lower_closed && factor.sign_at(lo.numer(), lo.denom()) == 0 {
            distinct_in_interval += 1;
        }
    };
    if rest.degree().unwrap_or(0) > 0 {
        let rest = rest.primitive_part();
        let chain = SturmChain::signed_remainders(&rest);
        if chain.is_squarefree_input() {
            tally(0, &rest, &chain);
        } else {
            for (i, factor) in rest.squarefree_decomposition().iter().enumerate() {
                if factor.degree().unwrap_or(0) > 0 {
                    tally(i, factor, &SturmChain::new(factor)?);
                }
            }
        }
    }
    let certified = real_with_mult == degree
        && distinct_in_interval == distinct_nonzero
        && all_real_distinct == distinct_nonzero;
    Ok(RootCertificate {
        degree,
        zero_root_multiplicity: zero_mult,
        distinct_nonzero_roots: distinct_nonzero,
        distinct_in_interval,
        real_roots_with_multiplicity: real_with_mult,
        certified,
    })
}
