//! Ring specification expressions and their expansion into Cayley tables.
//!
//! Element encodings, all deterministic:
//!
//! * `zmod(n)` and prime `gf(p)`: residue `i` is index `i`.
//! * `gf(p^k)`: polynomial `c0 + c1 x + ..` is index `c0 + c1 p + ..`,
//!   reduced modulo the least monic irreducible of degree `k`.
//! * `product(A, B, ..)`: tuples in lexicographic order, first factor most
//!   significant.
//! * `mat(R, n)`: entries row-major, entry `(0,0)` most significant.
//! * `tri(R, n)`: entries `(i, j)` with `i <= j`, row-major, first most
//!   significant.
//! * `grpalg(R, G)`: coefficients by group element index, the coefficient of
//!   element `0` most significant.
//! * `subring(R, [..])`: the listed elements, re-indexed by list position.

use std::fmt;

use super::{FiniteRing, Limits};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupExpr};
use crate::syntax::Parser;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Gf(usize),
    Zmod(usize),
    Product(Vec<RingExpr>),
    Mat(Box<RingExpr>, usize),
    Tri(Box<RingExpr>, usize),
    GroupAlgebra(Box<RingExpr>, GroupExpr),
    Tables {
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
    },
    Subring(Box<RingExpr>, Vec<usize>),
}

impl RingExpr {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        let e = Self::parse_from(&mut p)?;
        p.expect_end()?;
        Ok(e)
    }

    pub(crate) fn parse_from(p: &mut Parser) -> Result<Self> {
        let name = p.ident()?;
        if name == "tables" {
            return Self::parse_tables(p);
        }
        p.expect_punct('(')?;
        let expr = match name.as_str() {
            "gf" => RingExpr::Gf(p.uint()?),
            "zmod" => RingExpr::Zmod(p.uint()?),
            "product" => {
                let mut factors = vec![Self::parse_from(p)?];
                while p.eat_punct(',') {
                    factors.push(Self::parse_from(p)?);
                }
                RingExpr::Product(factors)
            }
            "mat" | "tri" => {
                let base = Box::new(Self::parse_from(p)?);
                p.expect_punct(',')?;
                let n = p.uint()?;
                if name == "mat" {
                    RingExpr::Mat(base, n)
                } else {
                    RingExpr::Tri(base, n)
                }
            }
            "grpalg" => {
                let base = Box::new(Self::parse_from(p)?);
                p.expect_punct(',')?;
                RingExpr::GroupAlgebra(base, GroupExpr::parse_from(p)?)
            }
            "subring" => {
                let base = Box::new(Self::parse_from(p)?);
                p.expect_punct(',')?;
                RingExpr::Subring(base, p.uint_list()?)
            }
            other => return p.error(format!("unknown ring constructor `{other}`")),
        };
        p.expect_punct(')')?;
        Ok(expr)
    }

    fn parse_tables(p: &mut Parser) -> Result<Self> {
        p.expect_punct('{')?;
        let (mut order, mut add, mut mul) = (None, None, None);
        while !p.eat_punct('}') {
            let key = p.ident()?;
            p.expect_punct('=')?;
            match key.as_str() {
                "order" => order = Some(p.uint()?),
                "add" => add = Some(p.uint_list()?),
                "mul" => mul = Some(p.uint_list()?),
                other => return p.error(format!("unknown table field `{other}`")),
            }
            if !p.eat_punct(';') && !p.is_punct('}') {
                return p.error("expected `;` or `}`");
            }
        }
        match (order, add, mul) {
            (Some(order), Some(add), Some(mul)) => Ok(RingExpr::Tables { order, add, mul }),
            _ => p.error("ring tables need `order`, `add` and `mul`"),
        }
    }

    pub fn build(&self, limits: Limits) -> Result<FiniteRing> {
        match self {
            RingExpr::Gf(q) => galois_field(*q, limits),
            RingExpr::Zmod(n) => {
                if *n == 0 {
                    return Err(Error::InvalidRing("zmod(0) is infinite".into()));
                }
                cap(*n as u128, limits)?;
                let n = *n;
                FiniteRing::from_fn(n, |a, b| (a + b) % n, |a, b| (a * b) % n, limits)
            }
            RingExpr::Product(factors) => {
                let rings = factors.iter().map(|f| f.build(limits)).collect::<Result<Vec<_>>>()?;
                product(&rings, limits)
            }
            RingExpr::Mat(base, n) => matrices(&base.build(limits)?, *n, false, limits),
            RingExpr::Tri(base, n) => matrices(&base.build(limits)?, *n, true, limits),
            RingExpr::GroupAlgebra(base, g) => group_algebra(&base.build(limits)?, &g.build_finite()?, limits),
            RingExpr::Tables { order, add, mul } => FiniteRing::from_tables(*order, add.clone(), mul.clone(), limits),
            RingExpr::Subring(base, elems) => base.build(limits)?.induced_subring(elems),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
            write!(f, "[")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")
        }
        match self {
            RingExpr::Gf(q) => write!(f, "gf({q})"),
            RingExpr::Zmod(n) => write!(f, "zmod({n})"),
            RingExpr::Product(fs) => {
                write!(f, "product(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            RingExpr::Mat(b, n) => write!(f, "mat({b},{n})"),
            RingExpr::Tri(b, n) => write!(f, "tri({b},{n})"),
            RingExpr::GroupAlgebra(b, g) => write!(f, "grpalg({b},{g})"),
            RingExpr::Tables { order, add, mul } => {
                write!(f, "tables{{order={order}; add=")?;
                list(f, add)?;
                write!(f, "; mul=")?;
                list(f, mul)?;
                write!(f, "}}")
            }
            RingExpr::Subring(b, xs) => {
                write!(f, "subring({b},")?;
                list(f, xs)?;
                write!(f, ")")
            }
        }
    }
}

/// Parses and expands a ring specification.
pub fn build_ring(spec: &str, limits: Limits) -> Result<FiniteRing> {
    RingExpr::parse(spec)?.build(limits)
}

fn cap(order: u128, limits: Limits) -> Result<usize> {
    if order > limits.max_order as u128 {
        Err(Error::OrderCap {
            order,
            cap: limits.max_order,
        })
    } else {
        Ok(order as usize)
    }
}

fn checked_power(base: usize, exp: usize, limits: Limits) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > limits.max_order as u128 {
            return Err(Error::OrderCap {
                order: acc,
                cap: limits.max_order,
            });
        }
    }
    Ok(acc as usize)
}

/// Digit expansion with the first digit most significant.
fn digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

fn undigits(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, &d| acc * base + d)
}

fn product(rings: &[FiniteRing], limits: Limits) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(Error::InvalidRing("product needs at least one factor".into()));
    }
    let mut order: u128 = 1;
    for r in rings {
        order = order.saturating_mul(r.order() as u128);
    }
    let order = cap(order, limits)?;
    let split = |mut x: usize| -> Vec<usize> {
        let mut out = vec![0; rings.len()];
        for (k, r) in rings.iter().enumerate().rev() {
            out[k] = x % r.order();
            x /= r.order();
        }
        out
    };
    let join = |parts: &[usize]| -> usize {
        rings
            .iter()
            .zip(parts)
            .fold(0, |acc, (r, &p)| acc * r.order() + p)
    };
    let op = |a: usize, b: usize, mul: bool| -> usize {
        let (xa, xb) = (split(a), split(b));
        let parts: Vec<usize> = rings
            .iter()
            .enumerate()
            .map(|(k, r)| if mul { r.mul(xa[k], xb[k]) } else { r.add(xa[k], xb[k]) })
            .collect();
        join(&parts)
    };
    FiniteRing::from_fn(order, |a, b| op(a, b, false), |a, b| op(a, b, true), limits)
}

fn matrices(base: &FiniteRing, n: usize, upper: bool, limits: Limits) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::InvalidRing("matrix size must be positive".into()));
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper || i <= j)
        .collect();
    let q = base.order();
    let order = checked_power(q, cells.len(), limits)?;
    let z = base.zero();
    let to_matrix = |x: usize| -> Vec<usize> {
        let ds = digits(x, q, cells.len());
        let mut m = vec![z; n * n];
        for (k, &(i, j)) in cells.iter().enumerate() {
            m[i * n + j] = ds[k];
        }
        m
    };
    let from_matrix = |m: &[usize]| -> usize {
        let ds: Vec<usize> = cells.iter().map(|&(i, j)| m[i * n + j]).collect();
        undigits(&ds, q)
    };
    FiniteRing::from_fn(
        order,
        |a, b| {
            let (ma, mb) = (to_matrix(a), to_matrix(b));
            let sum: Vec<usize> = ma.iter().zip(&mb).map(|(&x, &y)| base.add(x, y)).collect();
            from_matrix(&sum)
        },
        |a, b| {
            let (ma, mb) = (to_matrix(a), to_matrix(b));
            let mut prod = vec![z; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = z;
                    for k in 0..n {
                        acc = base.add(acc, base.mul(ma[i * n + k], mb[k * n + j]));
                    }
                    prod[i * n + j] = acc;
                }
            }
            from_matrix(&prod)
        },
        limits,
    )
}

fn group_algebra(base: &FiniteRing, group: &FiniteGroup, limits: Limits) -> Result<FiniteRing> {
    let q = base.order();
    let k = group.order();
    let order = checked_power(q, k, limits)?;
    let z = base.zero();
    FiniteRing::from_fn(
        order,
        |a, b| {
            let (xa, xb) = (digits(a, q, k), digits(b, q, k));
            let s: Vec<usize> = xa.iter().zip(&xb).map(|(&x, &y)| base.add(x, y)).collect();
            undigits(&s, q)
        },
        |a, b| {
            let (xa, xb) = (digits(a, q, k), digits(b, q, k));
            let mut out = vec![z; k];
            for g in 0..k {
                for h in 0..k {
                    let gh = group.op(g, h);
                    out[gh] = base.add(out[gh], base.mul(xa[g], xb[h]));
                }
            }
            undigits(&out, q)
        },
        limits,
    )
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Coefficients `c0 + c1 p + ..` little-endian, as in the index encoding.
fn poly_digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn poly_index(cs: &[usize], p: usize) -> usize {
    cs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two residues modulo the monic polynomial `x^k + low(x)`.
fn poly_mulmod(a: &[usize], b: &[usize], low: &[usize], p: usize) -> Vec<usize> {
    let k = low.len();
    let mut full = vec![0; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            full[i + j] = (full[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = full[deg];
        if c == 0 {
            continue;
        }
        full[deg] = 0;
        // x^deg = -low(x) x^(deg-k)
        for (i, &l) in low.iter().enumerate() {
            let t = deg - k + i;
            full[t] = (full[t] + (p - l) * c) % p;
        }
    }
    full.truncate(k);
    full
}

fn galois_field(q: usize, limits: Limits) -> Result<FiniteRing> {
    let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidRing(format!("gf({q}): {q} is not a prime power")))?;
    if q > 256 {
        return Err(Error::InvalidRing(format!("gf({q}): field order above 256")));
    }
    cap(q as u128, limits)?;
    if k == 1 {
        return FiniteRing::from_fn(p, |a, b| (a + b) % p, |a, b| (a * b) % p, limits);
    }
    let low = (0..q)
        .map(|i| poly_digits(i, p, k))
        .find(|low| {
            (1..q).all(|a| {
                let pa = poly_digits(a, p, k);
                (1..q).all(|b| poly_mulmod(&pa, &poly_digits(b, p, k), low, p).iter().any(|&c| c != 0))
            })
        })
        .expect("an irreducible polynomial of every degree exists");
    FiniteRing::from_fn(
        q,
        |a, b| {
            let (pa, pb) = (poly_digits(a, p, k), poly_digits(b, p, k));
            let s: Vec<usize> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
            poly_index(&s, p)
        },
        |a, b| poly_index(&poly_mulmod(&poly_digits(a, p, k), &poly_digits(b, p, k), &low, p), p),
        limits,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(expr: &str) -> FiniteRing {
        build_ring(expr, Limits::default()).unwrap()
    }

    #[test]
    fn small_fields_and_residues() {
        let f2 = ring("gf(2)");
        assert_eq!((f2.order(), f2.unit()), (2, Some(1)));
        let z4 = ring("zmod(4)");
        assert_eq!(z4.mul(2, 2), 0);
        let f4 = ring("gf(4)");
        // x * x = x + 1 modulo x^2 + x + 1.
        assert_eq!(f4.mul(2, 2), 3);
        assert!((1..4).all(|a| (1..4).any(|b| f4.mul(a, b) == 1)));
        let f8 = ring("gf(8)");
        assert!((1..8).all(|a| (1..8).any(|b| f8.mul(a, b) == 1)));
    }

    #[test]
    fn product_encoding() {
        let p = ring("product(gf(2),gf(2))");
        assert_eq!(p.order(), 4);
        assert_eq!(p.unit(), Some(3));
        // (1,0)(0,1) = 0
        assert_eq!(p.mul(2, 1), 0);
    }

    #[test]
    fn matrix_encodings() {
        let m = ring("mat(gf(2),2)");
        assert_eq!(m.order(), 16);
        // E12 = 0100b, E21 = 0010b, E11 = 1000b.
        assert_eq!(m.mul(4, 2), 8);
        assert_eq!(m.unit(), Some(9));
        let t = ring("tri(gf(2),2)");
        assert_eq!(t.order(), 8);
        // (a11, a12, a22): E11 = 4, E12 = 2, E22 = 1.
        assert_eq!(t.mul(4, 2), 2);
        assert_eq!(t.mul(2, 1), 2);
        assert_eq!(t.mul(2, 2), 0);
        assert_eq!(ring("tri(gf(2),3)").order(), 64);
    }

    #[test]
    fn group_algebra_of_cyclic() {
        let a = ring("grpalg(gf(2),cyclic(2))");
        assert_eq!(a.order(), 4);
        // g = 01b, g * g = e = 10b.
        assert_eq!(a.mul(1, 1), 2);
        assert_eq!(a.unit(), Some(2));
        // (e + g)^2 = 0 in characteristic 2.
        assert_eq!(a.mul(3, 3), 0);
    }

    #[test]
    fn tables_and_subrings() {
        let t = ring("tables{order=2; add=[0,1,1,0]; mul=[0,0,0,1]}");
        assert_eq!(t.unit(), Some(1));
        let s = ring("subring(zmod(8),[0,2,4,6])");
        assert_eq!(s.order(), 4);
        assert_eq!(s.unit(), None);
    }

    #[test]
    fn errors() {
        let lim = Limits::default();
        assert!(matches!(build_ring("gf(6)", lim), Err(Error::InvalidRing(_))));
        assert!(matches!(build_ring("mat(gf(2),3)", lim), Err(Error::OrderCap { .. })));
        assert!(matches!(build_ring("frob(2)", lim), Err(Error::Parse { .. })));
        assert!(matches!(build_ring("gf(2", lim), Err(Error::Parse { .. })));
        assert!(matches!(
            build_ring("tables{order=2; add=[0,1,1,0]; mul=[0,1,1,0]}", lim),
            Err(Error::InvalidRing(_))
        ));
        assert!(matches!(build_ring("subring(zmod(8),[0,3])", lim), Err(Error::InvalidRing(_))));
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "gf(4)",
            "product(gf(2),zmod(3))",
            "tri(mat(gf(2),1),2)",
            "grpalg(gf(3),cyclic(2))",
            "subring(zmod(8),[0,2,4,6])",
            "tables{order=1; add=[0]; mul=[0]}",
        ] {
            let e = RingExpr::parse(src).unwrap();
            assert_eq!(e.to_string(), src);
            assert_eq!(RingExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
