//! Prime-power finite fields in a polynomial basis, and the affine families
//! `GF(p1^n1) x .. x GF(pk^nk) ⋊ (C_d ⋊ C_e)`.
//!
//! A field element is encoded as the integer `sum c_i p^i` of its coefficient
//! vector. In an affine family, `C_d` is generated by multiplication with a
//! fixed element `zeta` of order `d` in every component and `C_e` by the
//! Galois map `x -> x^(p^(n/e))`. The complement element `(a, j)` acts on a
//! vector as `v -> zeta^a * sigma^j(v)`, `sigma` first.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{gcd, is_power_of, is_prime, pow_mod, prime_divisors};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::CaseLabel;

pub const MAX_EXTENSION_DEGREE: u32 = 20;
const MAX_FIELD_ORDER: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    n: u32,
    order: u64,
    /// Monic modulus, coefficients low degree first (length `n + 1`).
    modulus: Vec<u64>,
    /// Modulus as a bit mask when `p == 2`.
    modulus_bits: u64,
    /// Prime divisors of `order - 1`.
    unit_primes: Vec<u64>,
}

/// `GF(p^n)` with the least monic irreducible modulus, comparing candidate
/// polynomials by their integer encoding (highest-degree coefficient most
/// significant).
pub fn make_field(p: u64, n: u32) -> Result<Field> {
    Field::new(p, n)
}

impl Field {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        let order = check_params(p, n)?;
        for code in 0..order {
            let mut modulus = digits(code, p, n as usize);
            modulus.push(1);
            if is_irreducible(&modulus, p) {
                return Ok(Self::assemble(p, n, order, modulus));
            }
        }
        Err(Error::InvalidField(format!("no irreducible polynomial of degree {n} over GF({p})")))
    }

    /// Field with an explicit monic modulus (coefficients low degree first).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic of degree >= 1".into()));
        }
        let n = (modulus.len() - 1) as u32;
        let order = check_params(p, n)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficient out of range".into()));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        Ok(Self::assemble(p, n, order, modulus.to_vec()))
    }

    fn assemble(p: u64, n: u32, order: u64, modulus: Vec<u64>) -> Self {
        let modulus_bits = if p == 2 {
            modulus.iter().enumerate().fold(0, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        Field {
            p,
            n,
            order,
            modulus,
            modulus_bits,
            unit_primes: prime_divisors(order - 1),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u64> = self.decode(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&d)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return self.mul_binary(a, b);
        }
        let n = self.n as usize;
        let p = self.p;
        let (da, db) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
            }
        }
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            // subtract c * x^(k-n) * modulus
            for (i, &m) in self.modulus.iter().enumerate() {
                let t = (c as u128 * m as u128 % p as u128) as u64;
                let slot = &mut prod[k - n + i];
                *slot = (*slot + p - t) % p;
            }
        }
        prod.truncate(n);
        self.encode(&prod)
    }

    fn mul_binary(&self, mut a: u64, b: u64) -> u64 {
        let n = self.n;
        let mut acc = 0u64;
        let mut shifted = b;
        while a != 0 {
            if a & 1 == 1 {
                acc ^= shifted;
            }
            a >>= 1;
            shifted <<= 1;
            if shifted >> n & 1 == 1 {
                shifted ^= self.modulus_bits;
            }
        }
        acc
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: u64) -> Option<u64> {
        (x != 0).then(|| self.pow(x, self.order - 2))
    }

    /// `x -> x^p`.
    pub fn frobenius(&self, x: u64) -> u64 {
        self.pow(x, self.p)
    }

    /// `x -> x^(p^k)`.
    pub fn frobenius_power(&self, x: u64, k: u32) -> u64 {
        (0..k % self.n).fold(x, |y, _| self.frobenius(y))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, x: u64) -> u64 {
        assert!(x != 0, "zero has no multiplicative order");
        let mut t = self.order - 1;
        for &r in &self.unit_primes {
            while t.is_multiple_of(r) && self.pow(x, t / r) == 1 {
                t /= r;
            }
        }
        t
    }

    /// First element, in encoding order, generating the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        (1..self.order)
            .find(|&x| self.multiplicative_order(x) == self.order - 1)
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// `g^((q-1)/d)` for the canonical primitive element `g`.
    pub fn element_of_order(&self, d: u64) -> Result<u64> {
        if d == 0 || !(self.order - 1).is_multiple_of(d) {
            return Err(Error::InvalidField(format!(
                "{d} does not divide the unit group order {}",
                self.order - 1
            )));
        }
        Ok(self.pow(self.primitive_element(), (self.order - 1) / d))
    }

    pub fn decode(&self, mut code: u64) -> Vec<u64> {
        let mut out = vec![0; self.n as usize];
        for slot in out.iter_mut() {
            *slot = code % self.p;
            code /= self.p;
        }
        out
    }

    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }
}

fn check_params(p: u64, n: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || n > MAX_EXTENSION_DEGREE {
        return Err(Error::InvalidField(format!(
            "extension degree {n} outside 1..={MAX_EXTENSION_DEGREE}"
        )));
    }
    match p.checked_pow(n) {
        Some(q) if q <= MAX_FIELD_ORDER => Ok(q),
        _ => Err(Error::InvalidField(format!("field order {p}^{n} exceeds 2^32"))),
    }
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    out
}

/// Remainder of `a` by a monic `b` over GF(p); coefficients low degree first.
fn poly_rem_monic(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let t = (c as u128 * bi as u128 % p as u128) as u64;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=n/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let n = poly.len() - 1;
    for deg in 1..=n / 2 {
        let count = p.pow(deg as u32);
        for code in 0..count {
            let mut divisor = digits(code, p, deg);
            divisor.push(1);
            if poly_rem_monic(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

pub fn field_add(x: u64, y: u64, f: &Field) -> u64 {
    f.add(x, y)
}

pub fn field_mul(x: u64, y: u64, f: &Field) -> u64 {
    f.mul(x, y)
}

pub fn field_pow(x: u64, e: u64, f: &Field) -> u64 {
    f.pow(x, e)
}

pub fn frobenius(x: u64, f: &Field) -> u64 {
    f.frobenius(x)
}

#[derive(Clone, Debug)]
pub struct AffineComponent {
    pub field: Field,
    pub zeta: u64,
    pub sigma_exponent: u32,
}

/// A validated affine family `K ⋊ (C_d ⋊ C_e)` with `K` a product of fields.
#[derive(Clone, Debug)]
pub struct AffineGroupSpec {
    components: Vec<AffineComponent>,
    d: u64,
    e: u64,
    /// `p^(n/e) mod d`, the power by which the Galois generator acts on `C_d`.
    twist: u64,
    /// Discrete logs of the powers of each component's `zeta`.
    zeta_logs: Vec<BTreeMap<u64, u64>>,
    radix: Vec<u64>,
    k_order: u64,
}

/// Builds and validates an affine family from `(p, n)` pairs.
pub fn build_affine_spec(fields: &[(u64, u32)], d: u64, e: u64) -> Result<AffineGroupSpec> {
    AffineGroupSpec::new(fields, d, e)
}

impl AffineGroupSpec {
    pub fn new(fields: &[(u64, u32)], d: u64, e: u64) -> Result<Self> {
        let invalid = |msg: alloc::string::String| Err(Error::InvalidFamily(msg));
        if fields.is_empty() {
            return invalid("at least one field component is required".into());
        }
        if d <= 1 {
            return invalid(format!("d = {d}: the complement of the kernel must be nontrivial"));
        }
        if e <= 1 {
            return invalid(format!("e = {e}: the Galois part must be nontrivial"));
        }
        let mut components = Vec::with_capacity(fields.len());
        let mut zeta_logs = Vec::with_capacity(fields.len());
        let mut twist = None;
        let mut radix = Vec::with_capacity(fields.len());
        let mut k_order = 1u64;
        for &(p, n) in fields {
            let field = Field::new(p, n)?;
            let q = field.order();
            if (q - 1) % d != 0 {
                return invalid(format!("d = {d} does not divide {p}^{n} - 1 = {}", q - 1));
            }
            if e > u64::from(n) || u64::from(n) % e != 0 {
                return invalid(format!("e = {e} does not divide n = {n} for GF({p}^{n})"));
            }
            let s = n / e as u32;
            for j in 1..e {
                let m = (pow_mod(p, j * u64::from(s), d) + d - 1) % d;
                if gcd(m, d) != 1 {
                    return invalid(format!(
                        "Galois power {j} fixes a nontrivial element of C_{d} in GF({p}^{n}): \
                         gcd({p}^{} - 1, {d}) != 1",
                        j * u64::from(s)
                    ));
                }
            }
            let r = pow_mod(p, u64::from(s), d);
            match twist {
                None => twist = Some(r),
                Some(t) if t != r => {
                    return invalid(format!(
                        "Galois maps act on C_{d} by different powers across components ({t} vs {r})"
                    ))
                }
                _ => {}
            }
            let zeta = field.element_of_order(d)?;
            let mut logs = BTreeMap::new();
            let mut z = 1;
            for a in 0..d {
                logs.insert(z, a);
                z = field.mul(z, zeta);
            }
            radix.push(k_order);
            k_order = k_order
                .checked_mul(q)
                .ok_or_else(|| Error::InvalidFamily("kernel order overflows".into()))?;
            zeta_logs.push(logs);
            components.push(AffineComponent {
                field,
                zeta,
                sigma_exponent: s,
            });
        }
        k_order
            .checked_mul(d)
            .and_then(|x| x.checked_mul(e))
            .ok_or_else(|| Error::InvalidFamily("group order overflows".into()))?;
        Ok(AffineGroupSpec {
            components,
            d,
            e,
            twist: twist.expect("nonempty"),
            zeta_logs,
            radix,
            k_order,
        })
    }

    pub fn components(&self) -> &[AffineComponent] {
        &self.components
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn k_order(&self) -> u64 {
        self.k_order
    }

    pub fn complement_order(&self) -> u64 {
        self.d * self.e
    }

    pub fn group_order(&self) -> u64 {
        self.k_order * self.d * self.e
    }

    /// The common characteristic, if every component has the same one.
    pub fn characteristic(&self) -> Option<u64> {
        let p = self.components[0].field.characteristic();
        self.components
            .iter()
            .all(|c| c.field.characteristic() == p)
            .then_some(p)
    }

    pub fn case_label(&self) -> CaseLabel {
        match self.characteristic() {
            None => CaseLabel::A,
            Some(p) if is_power_of(self.e, p) => CaseLabel::B,
            Some(_) => CaseLabel::C,
        }
    }

    pub fn point(&self, mut index: u64) -> Vec<u64> {
        self.components
            .iter()
            .map(|c| {
                let q = c.field.order();
                let x = index % q;
                index /= q;
                x
            })
            .collect()
    }

    pub fn point_index(&self, v: &[u64]) -> u64 {
        v.iter().zip(&self.radix).map(|(x, r)| x * r).sum()
    }

    /// `v -> zeta^a * sigma^j(v)`.
    pub fn act(&self, a: u64, j: u64, v: &[u64]) -> Vec<u64> {
        self.components
            .iter()
            .zip(v)
            .map(|(c, &x)| {
                let f = &c.field;
                let y = f.frobenius_power(x, (j % self.e) as u32 * c.sigma_exponent);
                f.mul(f.pow(c.zeta, a % self.d), y)
            })
            .collect()
    }

    /// Product in `C_d ⋊ C_e`: apply `first`, then `second`.
    pub fn compose_pairs(&self, first: (u64, u64), second: (u64, u64)) -> (u64, u64) {
        let (a, j) = first;
        let (b, k) = second;
        let a_twisted = a * pow_mod(self.twist, k, self.d) % self.d;
        ((b + a_twisted) % self.d, (j + k) % self.e)
    }

    /// Stabilizer of `v` in `C_d ⋊ C_e`, by checking all `d * e` pairs.
    pub fn stabilizer_pairs(&self, v: &[u64]) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for j in 0..self.e {
            for a in 0..self.d {
                if self.act(a, j, v) == v {
                    out.push((a, j));
                }
            }
        }
        out
    }

    /// Order of the stabilizer of `v`.
    ///
    /// `zeta` acts freely on nonzero vectors, so for each Galois power `j` at
    /// most one `a` can work; it is read off as a discrete log per nonzero
    /// component and the component logs must agree.
    pub fn stabilizer_order(&self, v: &[u64]) -> u64 {
        let mut count = 0;
        let inverses: Vec<Option<u64>> = self
            .components
            .iter()
            .zip(v)
            .map(|(c, &x)| c.field.inv(x))
            .collect();
        let mut images: Vec<u64> = v.to_vec();
        for _ in 0..self.e {
            let mut agreed: Option<u64> = None;
            let mut ok = true;
            for (i, c) in self.components.iter().enumerate() {
                let Some(xinv) = inverses[i] else { continue };
                // sigma^j(x) / x must be zeta^(-a)
                let ratio = c.field.mul(images[i], xinv);
                match self.zeta_logs[i].get(&ratio) {
                    Some(&l) if agreed.is_none_or(|a| a == l) => agreed = Some(l),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                count += 1;
            }
            for (i, c) in self.components.iter().enumerate() {
                images[i] = c.field.frobenius_power(images[i], c.sigma_exponent);
            }
        }
        count
    }

    fn structured_prime(&self) -> Result<u64> {
        let p = self.characteristic().ok_or_else(|| {
            Error::Uncomputable("kernel is not of prime-power order; no m_p^* to count".into())
        })?;
        if (self.d * self.e).is_multiple_of(p) {
            return Err(Error::Uncomputable(format!(
                "p = {p} divides |C_d ⋊ C_e| = {}; order-{p} subgroups outside K need enumeration",
                self.d * self.e
            )));
        }
        Ok(p)
    }

    /// Nonzero kernel vectors grouped by the order of their stabilizer.
    pub fn stabilizer_breakdown(&self) -> Result<StabilizerBreakdown> {
        let p = self.structured_prime()?;
        let mut by_order = BTreeMap::new();
        for idx in 1..self.k_order {
            let v = self.point(idx);
            *by_order.entry(self.stabilizer_order(&v)).or_insert(0u64) += 1;
        }
        Ok(StabilizerBreakdown { p, by_order })
    }

    /// Number of order-p subgroups whose centralizer is a p-group, counted
    /// from stabilizers without enumerating the group.
    pub fn structured_m_p_star(&self) -> Result<u64> {
        self.stabilizer_breakdown()?.m_p_star()
    }

    pub fn counts(&self) -> StructuredCounts {
        let case_label = self.case_label();
        let m_p_star = match case_label {
            CaseLabel::C => self.structured_m_p_star().ok(),
            _ => None,
        };
        let delta_component_count = match case_label {
            CaseLabel::A => Some(self.k_order + 1),
            CaseLabel::B => None,
            CaseLabel::C => m_p_star.map(|m| self.k_order + self.d + m),
        };
        StructuredCounts {
            k_order: self.k_order,
            h_order: self.d,
            index_g_l: self.e,
            group_order: self.group_order(),
            m_p_star,
            delta_component_count,
            case_label,
        }
    }

    fn point_map(&self, f: impl Fn(&[u64]) -> Vec<u64>) -> Permutation {
        let images = (0..self.k_order)
            .map(|i| self.point_index(&f(&self.point(i))) as u32)
            .collect();
        Permutation::from_images(images).expect("affine maps are bijective")
    }

    /// Generators of the permutation realization on the points of `K`:
    /// translations by a basis of each component, then multiplication by
    /// `zeta`, then the Galois map.
    pub fn to_permutation_group(&self, degree_cap: u64) -> Result<Vec<Permutation>> {
        if self.k_order > degree_cap || self.k_order > u64::from(u32::MAX) {
            return Err(Error::CapExceeded {
                cap: degree_cap as usize,
            });
        }
        let mut gens = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let p = c.field.characteristic();
            for b in 0..c.field.degree() {
                let basis = p.pow(b);
                gens.push(self.point_map(|v| {
                    let mut w = v.to_vec();
                    w[i] = c.field.add(w[i], basis);
                    w
                }));
            }
        }
        gens.push(self.point_map(|v| self.act(1, 0, v)));
        gens.push(self.point_map(|v| self.act(0, 1, v)));
        Ok(gens)
    }
}

pub fn structured_m_p_star(spec: &AffineGroupSpec) -> Result<u64> {
    spec.structured_m_p_star()
}

/// Involutions of `K` grouped by the order of their stabilizer in the
/// complement; the entry for order 1 holds the involutions no element of odd
/// prime order fixes.
pub fn structured_fixed_involution_breakdown(spec: &AffineGroupSpec) -> Result<StabilizerBreakdown> {
    let breakdown = spec.stabilizer_breakdown()?;
    if breakdown.p != 2 {
        return Err(Error::InvalidFamily(format!(
            "involution breakdown needs characteristic 2, not {}",
            breakdown.p
        )));
    }
    Ok(breakdown)
}

/// Count of nonzero kernel vectors per stabilizer order, with the prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerBreakdown {
    pub p: u64,
    pub by_order: BTreeMap<u64, u64>,
}

impl StabilizerBreakdown {
    pub fn vectors_with_stabilizer_order(&self, t: u64) -> u64 {
        self.by_order.get(&t).copied().unwrap_or(0)
    }

    /// Vectors fixed by some nontrivial complement element.
    pub fn fixed_vectors(&self) -> u64 {
        self.by_order.iter().filter(|(&t, _)| t > 1).map(|(_, &c)| c).sum()
    }

    pub fn total_vectors(&self) -> u64 {
        self.by_order.values().sum()
    }

    pub fn m_p_star(&self) -> Result<u64> {
        let free = self.vectors_with_stabilizer_order(1);
        if !free.is_multiple_of(self.p - 1) {
            return Err(Error::Inconsistent(format!(
                "{free} free vectors is not a multiple of p - 1 = {}",
                self.p - 1
            )));
        }
        Ok(free / (self.p - 1))
    }
}

/// Orders the closed-form counts consume, read straight off an affine spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredCounts {
    pub k_order: u64,
    pub h_order: u64,
    pub index_g_l: u64,
    pub group_order: u64,
    pub m_p_star: Option<u64>,
    pub delta_component_count: Option<u64>,
    pub case_label: CaseLabel,
}
