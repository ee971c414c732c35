use super::{Mat, Rat};
use num::bigint::Sign;
use num::{BigInt, BigUint, Integer, One, Signed, Zero};

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first, leading coefficient nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `x - c`.
    pub fn x_minus(c: &Rat) -> Self {
        Poly::new(vec![-c.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports degree 0 by convention of callers
    /// that check `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.leading();
        if r.len() <= dd {
            return (Poly::zero(), Poly::new(r));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        while r.len() > dd && !r.is_empty() {
            let lead = r.last().unwrap().clone();
            if lead.is_zero() {
                r.pop();
                continue;
            }
            let k = r.len() - 1 - dd;
            let f = &lead / &dl;
            for (j, c) in d.coeffs.iter().enumerate() {
                let s = &f * c;
                r[k + j] -= s;
            }
            q[k] = f;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.divmod(self).1.is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, u, v) with u·self + v·other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let nu = u0.sub(&q.mul(&u1));
            let nv = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let lead = r0.leading();
        let scale = Poly::constant(Rat::one() / lead);
        (r0.monic(), u0.mul(&scale), v0.mul(&scale))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a square matrix (Horner).
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        let n = m.rows();
        let mut acc = Mat::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

/// Monic minimal polynomial of a square matrix, by incremental linear
/// dependence of its powers.
pub fn min_poly(op: &Mat) -> Poly {
    let n = op.rows();
    assert_eq!(n, op.cols(), "min_poly needs a square matrix");
    if n == 0 {
        return Poly::new(vec![Rat::zero(), Rat::one()]);
    }
    let flat = |m: &Mat| -> Vec<Rat> {
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            v.extend(m.row(i).iter().cloned());
        }
        v
    };
    let mut powers: Vec<Vec<Rat>> = vec![flat(&Mat::identity(n))];
    let mut cur = Mat::identity(n);
    loop {
        cur = cur.mul(op);
        let target = flat(&cur);
        // Columns are the previous powers; solve for a dependence.
        let k = powers.len();
        let mut cols = Mat::zero(n * n, k);
        for (j, p) in powers.iter().enumerate() {
            for (i, v) in p.iter().enumerate() {
                cols[(i, j)] = v.clone();
            }
        }
        if let Some(x) = cols.solve(&target) {
            // op^k = sum x_i op^i  =>  min poly = x^k - sum x_i x^i.
            let mut coeffs: Vec<Rat> = x.into_iter().map(|c| -c).collect();
            coeffs.push(Rat::one());
            return Poly::new(coeffs);
        }
        powers.push(target);
    }
}

// ---------------------------------------------------------------------------
// Factorization over Q: square-free decomposition, then Kronecker
// interpolation on the primitive integer model.
// ---------------------------------------------------------------------------

/// Irreducible factorization over the rationals. Returns monic irreducible
/// factors with multiplicities; the product times `p.leading()` equals `p`.
pub fn factor_rational(p: &Poly) -> Vec<(Poly, usize)> {
    assert!(
        !p.is_zero() && p.degree() >= 1,
        "factor_rational needs degree >= 1"
    );
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (sf, mult) in squarefree_decomposition(&p.monic()) {
        if sf.degree() == 0 {
            continue;
        }
        for f in factor_squarefree(&sf) {
            merge_factor(&mut out, f, mult);
        }
    }
    out.sort_by(|a, b| (a.0.degree(), format!("{}", a.0)).cmp(&(b.0.degree(), format!("{}", b.0))));
    out
}

fn merge_factor(out: &mut Vec<(Poly, usize)>, f: Poly, mult: usize) {
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Yun's algorithm: `f = prod a_i^i` with each `a_i` square-free.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let g = f.gcd(&f.derivative());
    if g.degree() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut parts = Vec::new();
    let mut c = f.divmod(&g).0;
    let mut d = f.derivative().divmod(&g).0.sub(&c.derivative());
    let mut i = 1;
    while c.degree() > 0 {
        let a = c.gcd(&d);
        if a.degree() > 0 {
            parts.push((a.clone(), i));
        }
        c = c.divmod(&a).0;
        d = d.divmod(&a).0.sub(&c.derivative());
        i += 1;
    }
    parts
}

/// Integer polynomial, lowest degree first, content 1, positive leading
/// coefficient.
type IntPoly = Vec<BigInt>;

fn to_int_primitive(p: &Poly) -> IntPoly {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    ints
}

fn int_to_poly(p: &IntPoly) -> Poly {
    Poly::new(p.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

fn int_eval(p: &IntPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Factor a square-free monic rational polynomial into monic irreducibles.
fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    let fi = to_int_primitive(f);
    kronecker(&fi)
        .into_iter()
        .map(|g| int_to_poly(&g).monic())
        .collect()
}

fn kronecker(f: &IntPoly) -> Vec<IntPoly> {
    let deg = f.len() - 1;
    if deg <= 1 {
        return vec![f.clone()];
    }
    // Integer roots first: they are cheap and keep the interpolation small.
    if let Some(r) = integer_root(f) {
        let root_factor: IntPoly = vec![-r.clone(), BigInt::one()];
        let quot = int_divide_exact(f, &root_factor).expect("root test guaranteed divisibility");
        let mut out = vec![root_factor];
        out.extend(kronecker(&quot));
        return out;
    }
    // Evaluation points 0, 1, -1, 2, -2, ... ; pick those with the fewest
    // divisors for the combination search.
    let max_half = deg / 2;
    let mut points: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    let mut k: i64 = 0;
    while points.len() < max_half + 1 {
        let x = BigInt::from(k);
        let v = int_eval(f, &x);
        // v != 0 since integer roots are gone.
        points.push((x, signed_divisors(&v)));
        k = if k > 0 { -k } else { -k + 1 };
    }
    points.sort_by_key(|(_, d)| d.len());
    for half in 2..=max_half {
        let pts = &points[..half + 1];
        if let Some(g) = kronecker_search(f, pts, half) {
            let quot = int_divide_exact(f, &g).expect("kronecker candidate divides");
            let mut out = kronecker(&g);
            out.extend(kronecker(&quot));
            return out;
        }
    }
    vec![f.clone()]
}

/// Search all divisor combinations of the given sampled points for a degree
/// `target_deg` integer factor.
fn kronecker_search(
    f: &IntPoly,
    pts: &[(BigInt, Vec<BigInt>)],
    target_deg: usize,
) -> Option<IntPoly> {
    let npts = target_deg + 1;
    let mut idx = vec![0usize; npts];
    'combos: loop {
        let samples: Vec<(BigInt, BigInt)> = (0..npts)
            .map(|i| (pts[i].0.clone(), pts[i].1[idx[i]].clone()))
            .collect();
        if let Some(cand) = interpolate_integer(&samples, target_deg) {
            if cand.len() == target_deg + 1 && int_divide_exact(f, &cand).is_some() {
                return Some(normalize_sign(cand));
            }
        }
        // Next combination.
        for i in 0..npts {
            idx[i] += 1;
            if idx[i] < pts[i].1.len() {
                continue 'combos;
            }
            idx[i] = 0;
        }
        return None;
    }
}

fn normalize_sign(mut p: IntPoly) -> IntPoly {
    if p.last().is_some_and(|c| c.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Lagrange interpolation; returns the integer polynomial through the
/// samples if all coefficients come out integral.
fn interpolate_integer(samples: &[(BigInt, BigInt)], deg: usize) -> Option<IntPoly> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut term = Poly::constant(Rat::from_integer(yi.clone()));
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let scale = Rat::from_integer(xi - xj);
            let lin = Poly::new(vec![
                Rat::from_integer(-xj.clone()) / scale.clone(),
                Rat::one() / scale,
            ]);
            term = term.mul(&lin);
        }
        acc = acc.add(&term);
    }
    if acc.is_zero() || acc.degree() != deg {
        return None;
    }
    let mut out = Vec::with_capacity(acc.coeffs().len());
    for c in acc.coeffs() {
        if !c.denom().is_one() {
            return None;
        }
        out.push(c.numer().clone());
    }
    Some(out)
}

/// Exact division of integer polynomials, or None if not divisible.
fn int_divide_exact(f: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    let fp = int_to_poly(f);
    let dp = int_to_poly(d);
    let (q, r) = fp.divmod(&dp);
    if !r.is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(q.coeffs().len());
    for c in q.coeffs() {
        if !c.denom().is_one() {
            return None;
        }
        out.push(c.numer().clone());
    }
    Some(out)
}

/// One integer root of `f`, if any (p/q test specialized to q = 1, plus the
/// general rational-root test folded in by clearing the leading coefficient).
fn integer_root(f: &IntPoly) -> Option<BigInt> {
    if f[0].is_zero() {
        return Some(BigInt::zero());
    }
    // Rational roots p/q need p | f[0] and q | lead; integer roots are the
    // common case and cheap to test here — proper fractions fall out of the
    // degree-1 Kronecker candidates instead.
    signed_divisors(&f[0])
        .into_iter()
        .find(|d| int_eval(f, d).is_zero())
}

/// All divisors of |v| with both signs, sorted by magnitude then sign.
fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    let n = v.magnitude().clone();
    let mut divs: Vec<BigUint> = vec![BigUint::one()];
    for (p, e) in factorize(&n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        let d = BigInt::from_biguint(Sign::Plus, d);
        out.push(d.clone());
        out.push(-d);
    }
    out
}

/// Prime factorization: trial division, then Miller–Rabin + Pollard rho for
/// what remains. Deterministic output.
fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut m = n.clone();
    let push = |p: BigUint, out: &mut Vec<(BigUint, u32)>| {
        for (q, e) in out.iter_mut() {
            if *q == p {
                *e += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = BigUint::from(small);
        while (&m % &p).is_zero() {
            m /= &p;
            push(p.clone(), &mut out);
        }
    }
    let mut d = BigUint::from(53u32);
    let two = BigUint::from(2u32);
    let trial_bound = BigUint::from(1_000_000u32);
    while &d * &d <= m && d < trial_bound {
        while (&m % &d).is_zero() {
            m /= &d;
            push(d.clone(), &mut out);
        }
        d += &two;
    }
    // Whatever remains has no prime factor below min(d, 10^6).
    let mut stack = vec![m];
    while let Some(v) = stack.pop() {
        if v.is_one() {
            continue;
        }
        if v < &trial_bound * &trial_bound || is_probable_prime(&v) {
            push(v, &mut out);
            continue;
        }
        let f = pollard_rho(&v);
        stack.push(&v / &f);
        stack.push(f);
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n == &two {
        return true;
    }
    if (n % &two).is_zero() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    // Deterministic for n < 3.3e24 with this witness set.
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigUint::from(w) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = BigUint::one();
        let f = |v: &BigUint| (v * v + &c) % n;
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && &d != n {
            return d;
        }
        c += &one;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn p(ints: &[i64]) -> Poly {
        Poly::new(ints.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn min_poly_identity() {
        let m = Mat::identity(3);
        assert_eq!(min_poly(&m), p(&[-1, 1])); // x - 1
    }

    #[test]
    fn min_poly_zero_matrix() {
        let m = Mat::zero(2, 2);
        assert_eq!(min_poly(&m), p(&[0, 1])); // x
    }

    #[test]
    fn min_poly_nilpotent() {
        let m = Mat::from_ints(2, 2, &[0, 1, 0, 0]);
        assert_eq!(min_poly(&m), p(&[0, 0, 1])); // x^2
    }

    #[test]
    fn min_poly_annihilates() {
        let m = Mat::from_ints(3, 3, &[2, 1, 0, 0, 2, 0, 0, 0, 5]);
        let mp = min_poly(&m);
        assert!(mp.eval_mat(&m).is_zero());
    }

    #[test]
    fn factor_difference_of_squares() {
        let f = factor_rational(&p(&[-1, 0, 1])); // x^2 - 1
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(_, m)| *m == 1));
        assert!(f.contains(&(p(&[-1, 1]), 1)));
        assert!(f.contains(&(p(&[1, 1]), 1)));
    }

    #[test]
    fn factor_irreducible_quadratic() {
        let f = factor_rational(&p(&[1, 0, 1])); // x^2 + 1
        assert_eq!(f, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_cubic_with_roots() {
        let f = factor_rational(&p(&[0, -1, 0, 1])); // x^3 - x
        assert_eq!(f.len(), 3);
        assert!(f.contains(&(p(&[0, 1]), 1)));
        assert!(f.contains(&(p(&[-1, 1]), 1)));
        assert!(f.contains(&(p(&[1, 1]), 1)));
    }

    #[test]
    fn factor_with_multiplicity_and_remultiply() {
        // (x-1)^2 (x^2+x+1)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[1, 1, 1]));
        let factors = factor_rational(&f);
        let mut prod = Poly::constant(f.leading());
        for (g, m) in &factors {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f);
        assert!(factors.contains(&(p(&[-1, 1]), 2)));
        assert!(factors.contains(&(p(&[1, 1, 1]), 1)));
    }

    #[test]
    fn factor_rational_leading_coefficient() {
        // 2x^2 - 2 = 2 (x-1)(x+1); factors are monic.
        let f = p(&[-2, 0, 2]);
        let factors = factor_rational(&f);
        let mut prod = Poly::constant(f.leading());
        for (g, m) in &factors {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn factor_quartic_into_quadratics() {
        // (x^2+1)(x^2+x+1): no rational roots, needs the interpolation search.
        let f = p(&[1, 0, 1]).mul(&p(&[1, 1, 1]));
        let factors = factor_rational(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&(p(&[1, 0, 1]), 1)));
        assert!(factors.contains(&(p(&[1, 1, 1]), 1)));
    }

    #[test]
    fn divisor_enumeration() {
        let d = signed_divisors(&BigInt::from(12));
        assert_eq!(d.len(), 12); // 1,2,3,4,6,12 with both signs
        assert!(d.contains(&BigInt::from(-6)));
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let a = p(&[-1, 1]).mul(&p(&[1, 1, 1])); // (x-1)(x^2+x+1)
        let b = p(&[-1, 1]).mul(&p(&[1, 1])); // (x-1)(x+1)
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        // Coprime pair.
        let (g, u, v) = p(&[1, 0, 1]).ext_gcd(&p(&[1, 1]));
        assert_eq!(g, Poly::one());
        assert_eq!(u.mul(&p(&[1, 0, 1])).add(&v.mul(&p(&[1, 1]))), Poly::one());
    }

    #[test]
    fn primality_and_rho() {
        assert!(is_probable_prime(&BigUint::from(1_000_003u64)));
        assert!(!is_probable_prime(&BigUint::from(1_000_001u64)));
        let f = factorize(&BigUint::from(600_851_475_143u64));
        let prod: BigUint = f.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(prod, BigUint::from(600_851_475_143u64));
    }
}
