//! Arithmetic in small finite fields GF(p^e).
//!
//! Supported fields have characteristic p in {2, 3, 5, 7}, extension degree
//! e <= 12, and order q = p^e <= 2^20. Every field is constructed from a
//! bundled Conway polynomial, which makes the whole family compatible: for
//! a | b the embedding GF(p^a) -> GF(p^b) that sends generator to the
//! appropriate power of generator is a ring homomorphism, and embeddings
//! through intermediate fields commute.
//!
//! Elements are encoded as canonical integers: the residue class
//! c_0 + c_1 x + ... + c_{e-1} x^{e-1} is encoded as c_0 + c_1 p + ... +
//! c_{e-1} p^{e-1}. With this encoding the elements of the prime field are
//! the integers 0..p, and the class of x (the multiplicative generator for
//! e >= 2) is the integer p.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Hard ceiling on the field order.
pub const MAX_ORDER: u64 = 1 << 20;
/// Largest extension degree in the bundled Conway table.
pub const MAX_DEGREE: u64 = 12;
/// Orders up to this bound get log/exp multiplication tables.
const TABLE_ORDER: u32 = 1 << 16;
/// Orders up to this bound additionally get a full addition table.
const ADD_TABLE_ORDER: u32 = 1 << 10;

/// Shared, immutable handle to a field. Cheap to clone.
pub type Field = Arc<FieldCtx>;

static CONWAY_TABLE: Lazy<HashMap<(u32, u32), Vec<u32>>> = Lazy::new(|| {
    let raw = include_str!("../data/conway.txt");
    let mut table = HashMap::new();
    for line in raw.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<u32> = line
            .split_whitespace()
            .map(|t| t.parse().expect("bundled Conway table is well-formed"))
            .collect();
        let (p, e) = (nums[0], nums[1]);
        let coeffs = nums[2..].to_vec();
        assert_eq!(coeffs.len() as u32, e + 1, "row ({p},{e}) has degree {e}");
        assert_eq!(*coeffs.last().unwrap(), 1, "row ({p},{e}) is monic");
        table.insert((p, e), coeffs);
    }
    table
});

static FIELD_CACHE: Lazy<Mutex<HashMap<(u32, u32), Field>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// A finite field GF(p^e), together with precomputed arithmetic tables.
///
/// Construct with [`FieldCtx::new`]; the result is cached per (p, e), so
/// repeated construction is cheap and all handles to the same field share
/// their tables.
pub struct FieldCtx {
    /// Characteristic.
    pub p: u32,
    /// Extension degree over the prime field.
    pub e: u32,
    /// Field order p^e.
    pub q: u32,
    /// Defining polynomial, coefficients ascending, monic of degree e.
    modulus: Vec<u32>,
    /// Canonical multiplicative generator (primitive element).
    generator: u32,
    /// exp_tab[i] = generator^i for i in 0..2(q-1), so products of two
    /// discrete logs can be looked up without a modulo reduction.
    exp_tab: Option<Vec<u32>>,
    /// log_tab[a] = discrete log of a base the generator, for a != 0.
    log_tab: Option<Vec<u32>>,
    /// Full addition table (q x q), only for small non-binary fields.
    add_tab: Option<Vec<u32>>,
    /// neg_tab[a] = -a.
    neg_tab: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.e)
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.e)
        }
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}
impl Eq for FieldCtx {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiply two polynomials over F_p and reduce modulo `modulus` (monic).
fn poly_mul_mod(a: &[u32], b: &[u32], p: u32, modulus: &[u32]) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for i in (e..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..e {
            // x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
            let sub = (c * modulus[j]) % p;
            prod[i - e + j] = (prod[i - e + j] + p - sub) % p;
        }
    }
    prod.truncate(e.max(1));
    prod
}

/// Remainder of `a` divided by monic `b`, both over F_p, coefficients ascending.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for j in 0..=db {
                let sub = (lead * b[j]) % p;
                r[shift + j] = (r[shift + j] + p - sub) % p;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

fn digits_of(mut n: u32, p: u32, e: u32) -> Vec<u32> {
    let mut d = vec![0u32; e as usize];
    for slot in d.iter_mut() {
        *slot = n % p;
        n /= p;
    }
    d
}

fn int_of_digits(d: &[u32], p: u32) -> u32 {
    let mut n = 0u32;
    for &c in d.iter().rev() {
        n = n * p + c;
    }
    n
}

impl FieldCtx {
    /// Build (or fetch from the process-wide cache) the field GF(p^e).
    ///
    /// Fails with [`Error::NotPrime`] when p is composite, with
    /// [`Error::DegreeTooLarge`] when e is 0 or exceeds 12, and with
    /// [`Error::NoConwayPolynomial`] when p is a prime outside {2, 3, 5, 7}
    /// or p^e exceeds 2^20.
    pub fn new(p: u64, e: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || e > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(e));
        }
        if ![2, 3, 5, 7].contains(&p) {
            return Err(Error::NoConwayPolynomial { p, e });
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q *= p;
            if q > MAX_ORDER {
                return Err(Error::NoConwayPolynomial { p, e });
            }
        }
        let key = (p as u32, e as u32);
        if let Some(f) = FIELD_CACHE.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let ctx = Self::build(p as u32, e as u32, q as u32)?;
        let field: Field = Arc::new(ctx);
        FIELD_CACHE
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| field.clone());
        Ok(field)
    }

    fn build(p: u32, e: u32, q: u32) -> Result<FieldCtx> {
        let modulus = CONWAY_TABLE
            .get(&(p, e))
            .cloned()
            .ok_or(Error::NoConwayPolynomial {
                p: p as u64,
                e: e as u64,
            })?;
        // Verify irreducibility by trial division against every monic
        // polynomial of degree 1..=e/2.
        for d in 1..=(e as usize / 2).max(if e == 1 { 0 } else { 1 }) {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut div = digits_of((low % (p as u64).pow(d as u32)) as u32, p, d as u32);
                div.push(1);
                let r = poly_rem(&modulus, &div, p);
                assert!(
                    !(r.len() == 1 && r[0] == 0),
                    "bundled polynomial for GF({p}^{e}) must be irreducible"
                );
            }
        }

        let generator = if e == 1 {
            // The table row for degree 1 is x + c0, whose root is -c0.
            (p - CONWAY_TABLE[&(p, 1)][0] % p) % p
        } else {
            p // the class of x
        };

        let mut neg_tab = vec![0u32; q as usize];
        for a in 0..q {
            let d = digits_of(a, p, e);
            let nd: Vec<u32> = d.iter().map(|&c| (p - c) % p).collect();
            neg_tab[a as usize] = int_of_digits(&nd, p);
        }

        let raw_mul = |a: u32, b: u32| -> u32 {
            let prod = poly_mul_mod(&digits_of(a, p, e), &digits_of(b, p, e), p, &modulus);
            int_of_digits(&prod, p)
        };

        let (exp_tab, log_tab) = if q <= TABLE_ORDER {
            let order = (q - 1) as usize;
            let mut exp = vec![0u32; 2 * order];
            let mut log = vec![u32::MAX; q as usize];
            let mut cur = 1u32;
            for i in 0..order {
                exp[i] = cur;
                assert!(
                    log[cur as usize] == u32::MAX,
                    "generator of GF({p}^{e}) must have order q-1"
                );
                log[cur as usize] = i as u32;
                cur = raw_mul(cur, generator);
            }
            assert_eq!(cur, 1, "generator of GF({p}^{e}) must have order q-1");
            for i in order..2 * order {
                exp[i] = exp[i - order];
            }
            (Some(exp), Some(log))
        } else {
            // Too big for tables: verify the generator order via the prime
            // factorization of q - 1.
            let mut n = (q - 1) as u64;
            let mut primes = Vec::new();
            let mut f = 2u64;
            while f * f <= n {
                if n % f == 0 {
                    primes.push(f);
                    while n % f == 0 {
                        n /= f;
                    }
                }
                f += 1;
            }
            if n > 1 {
                primes.push(n);
            }
            let pow_raw = |mut base: u32, mut exp: u64| -> u32 {
                let mut acc = 1u32;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = raw_mul(acc, base);
                    }
                    base = raw_mul(base, base);
                    exp >>= 1;
                }
                acc
            };
            for r in primes {
                assert!(
                    pow_raw(generator, (q as u64 - 1) / r) != 1,
                    "generator of GF({p}^{e}) must have order q-1"
                );
            }
            (None, None)
        };

        let add_tab = if p != 2 && q <= ADD_TABLE_ORDER {
            let mut tab = vec![0u32; (q as usize) * (q as usize)];
            for a in 0..q {
                let da = digits_of(a, p, e);
                for b in 0..q {
                    let db = digits_of(b, p, e);
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                    tab[(a * q + b) as usize] = int_of_digits(&sum, p);
                }
            }
            Some(tab)
        } else {
            None
        };

        Ok(FieldCtx {
            p,
            e,
            q,
            modulus,
            generator,
            exp_tab,
            log_tab,
            add_tab,
            neg_tab,
        })
    }

    /// The canonical multiplicative generator (a primitive element).
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// The defining polynomial, coefficients ascending, monic of degree e.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Iterator over all q elements in canonical integer order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// Base-p digit vector (length e) of an element.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        digits_of(a, self.p, self.e)
    }

    /// Element with the given base-p digit vector.
    pub fn from_digits(&self, d: &[u32]) -> u32 {
        int_of_digits(d, self.p)
    }

    /// a + b.
    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if let Some(tab) = &self.add_tab {
            return tab[(a * self.q + b) as usize];
        }
        let mut out = 0u32;
        let mut pw = 1u32;
        let (mut x, mut y) = (a, b);
        for _ in 0..self.e {
            out += ((x % self.p + y % self.p) % self.p) * pw;
            x /= self.p;
            y /= self.p;
            pw *= self.p;
        }
        out
    }

    /// -a.
    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        debug_assert!(a < self.q);
        self.neg_tab[a as usize]
    }

    /// a - b.
    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// a * b.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        match (&self.exp_tab, &self.log_tab) {
            (Some(exp), Some(log)) => {
                exp[(log[a as usize] + log[b as usize]) as usize]
            }
            _ => {
                let prod = poly_mul_mod(
                    &self.digits(a),
                    &self.digits(b),
                    self.p,
                    &self.modulus,
                );
                int_of_digits(&prod, self.p)
            }
        }
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero { q: self.q as u64 });
        }
        match (&self.exp_tab, &self.log_tab) {
            (Some(exp), Some(log)) => {
                let order = self.q - 1;
                Ok(exp[((order - log[a as usize]) % order) as usize])
            }
            _ => self.pow_checked(a, self.q as u64 - 2),
        }
    }

    /// a / b. Fails when b is zero.
    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^n for a non-negative integer exponent.
    pub fn pow(&self, a: u32, n: u64) -> u32 {
        self.pow_checked(a, n).expect("pow has no failure path")
    }

    fn pow_checked(&self, a: u32, n: u64) -> Result<u32> {
        if a == 0 {
            return Ok(if n == 0 { 1 } else { 0 });
        }
        if let (Some(exp), Some(log)) = (&self.exp_tab, &self.log_tab) {
            let order = (self.q - 1) as u64;
            let idx = (log[a as usize] as u128 * n as u128 % order as u128) as usize;
            return Ok(exp[idx]);
        }
        let mut acc = 1u32;
        let mut base = a;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Discrete log base the canonical generator, when tables exist.
    pub fn discrete_log(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        self.log_tab.as_ref().map(|t| t[a as usize])
    }

    /// True when this field is a subfield of `other` (same characteristic,
    /// dividing degree).
    pub fn is_subfield_of(&self, other: &FieldCtx) -> bool {
        self.p == other.p && other.e % self.e == 0
    }
}

/// A subfield embedding GF(p^a) -> GF(p^b) for a | b.
///
/// The embedding sends the source generator g_a to g_b^((p^b-1)/(p^a-1)).
/// Because both fields come from the same Conway family this map is a ring
/// homomorphism, and embeddings through intermediate fields commute. The
/// full map is precomputed element by element at construction, and (for
/// source orders up to 256) verified exhaustively to preserve addition and
/// multiplication.
pub struct Embedding {
    source: Field,
    target: Field,
    image_of_generator: u32,
    map: Vec<u32>,
}

impl Embedding {
    /// Build the embedding. Fails with [`Error::IncompatibleFields`] when
    /// the source is not a subfield of the target.
    pub fn new(source: &Field, target: &Field) -> Result<Embedding> {
        if !source.is_subfield_of(target) {
            return Err(Error::IncompatibleFields {
                pa: source.p as u64,
                ea: source.e as u64,
                pb: target.p as u64,
                eb: target.e as u64,
            });
        }
        let exponent = (target.q as u64 - 1) / (source.q as u64 - 1);
        let image_of_generator = target.pow(target.generator(), exponent);
        let mut map = vec![0u32; source.q as usize];
        let mut cur_s = 1u32;
        let mut cur_t = 1u32;
        for _ in 0..source.q - 1 {
            map[cur_s as usize] = cur_t;
            cur_s = source.mul(cur_s, source.generator());
            cur_t = target.mul(cur_t, image_of_generator);
        }
        let emb = Embedding {
            source: source.clone(),
            target: target.clone(),
            image_of_generator,
            map,
        };
        if source.q <= 256 {
            for a in 0..source.q {
                for b in 0..source.q {
                    debug_assert!(a < source.q && b < source.q);
                    let sum = emb.apply(source.add(a, b));
                    let prod = emb.apply(source.mul(a, b));
                    assert_eq!(
                        sum,
                        target.add(emb.apply(a), emb.apply(b)),
                        "embedding {source} -> {target} must preserve addition"
                    );
                    assert_eq!(
                        prod,
                        target.mul(emb.apply(a), emb.apply(b)),
                        "embedding {source} -> {target} must preserve multiplication"
                    );
                }
            }
        }
        Ok(emb)
    }

    /// Image of a source element.
    #[inline]
    pub fn apply(&self, a: u32) -> u32 {
        self.map[a as usize]
    }

    /// The source field.
    pub fn source(&self) -> &Field {
        &self.source
    }

    /// The target field.
    pub fn target(&self) -> &Field {
        &self.target
    }

    /// Image of the source generator.
    pub fn image_of_generator(&self) -> u32 {
        self.image_of_generator
    }
}
