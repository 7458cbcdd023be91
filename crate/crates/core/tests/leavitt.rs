use std::collections::BTreeMap;

use grprime::leavitt::{is_leavitt_prime, lpa_degree, DirectedGraph, LeavittRing, LpaElement, Mt3, Path};
use grprime::{build_ring, Error, Limits};
use proptest::prelude::*;

fn lpa(graph: &str, coeff: &str) -> LeavittRing {
    let g = DirectedGraph::parse(graph).unwrap();
    LeavittRing::new(g, build_ring(coeff, Limits::default()).unwrap()).unwrap()
}

/// Every monomial `αβ*` with both paths of length at most `max_len`.
fn monomials(l: &LeavittRing, max_len: usize) -> Vec<(Path, Path)> {
    let paths = l.paths_up_to(max_len);
    let mut out = Vec::new();
    for a in &paths {
        for b in &paths {
            if l.range(a) == l.range(b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

const DIAMOND: &str = "vertex a\nvertex b\nvertex c\nvertex d\nvertex z\n\
                       edge f1: a -> b\nedge f2: a -> b\nedge g: a -> c\nedge h: b -> d\nedge k: c -> d\n";

const LOOPS: &str = "vertex v\nvertex w\nedge e: v -> v\nedge f: v -> w\nedge g: w -> v\nedge l: w -> w\n";

#[test]
fn relations_hold() {
    for graph in [DIAMOND, LOOPS] {
        let l = lpa(graph, "zmod(3)");
        let g = l.graph().clone();
        for v in 0..g.vertex_count() {
            for w in 0..g.vertex_count() {
                let vw = l.mul(&l.vertex(v), &l.vertex(w)).unwrap();
                let expect = if v == w { l.vertex(v) } else { l.zero() };
                assert_eq!(vw, expect);
            }
            if !g.out_edges(v).is_empty() {
                let mut sum = l.zero();
                for &f in g.out_edges(v) {
                    sum = l.add(&sum, &l.mul(&l.edge(f), &l.ghost(f)).unwrap());
                }
                assert_eq!(sum, l.vertex(v), "sum f f* at {}", g.vertex_name(v));
            }
        }
        for f in 0..g.edge_count() {
            let (s, r) = (g.edge(f).source, g.edge(f).range);
            assert_eq!(l.mul(&l.vertex(s), &l.edge(f)).unwrap(), l.edge(f));
            assert_eq!(l.mul(&l.edge(f), &l.vertex(r)).unwrap(), l.edge(f));
            assert_eq!(l.mul(&l.vertex(r), &l.ghost(f)).unwrap(), l.ghost(f));
            assert_eq!(l.mul(&l.ghost(f), &l.vertex(s)).unwrap(), l.ghost(f));
            for f2 in 0..g.edge_count() {
                let prod = l.mul(&l.ghost(f), &l.edge(f2)).unwrap();
                let expect = if f == f2 { l.vertex(r) } else { l.zero() };
                assert_eq!(prod, expect);
            }
        }
    }
}

#[test]
fn single_edge_relation_v() {
    let l = lpa("vertex v\nvertex w\nedge f: v -> w\n", "gf(2)");
    assert_eq!(l.mul(&l.edge(0), &l.ghost(0)).unwrap(), l.vertex(0));
}

#[test]
fn degrees() {
    let l = lpa(LOOPS, "gf(2)");
    let v = Path::vertex(0);
    assert_eq!(lpa_degree(&v, &v), 0);
    let alpha = l.path(0, &[0, 1]).unwrap();
    let beta = l.path(1, &[3]).unwrap();
    assert_eq!(lpa_degree(&alpha, &beta), 1);
    assert_eq!(l.degree(&l.ghost(0)), Some(-1));
}

/// `L_R(E) ≅ ⊕_{sinks s} M_{P(s)}(R)` for a finite acyclic graph, where
/// `P(s)` is the set of paths ending at `s`; `αβ* ↦ Σ_γ E_{αγ, βγ}` over
/// paths `γ` from `r(α)` to a sink.
struct MatrixImage<'a> {
    l: &'a LeavittRing,
    to_sink: Vec<Path>,
}

type Matrix = BTreeMap<(Vec<usize>, usize, Vec<usize>, usize), usize>;

impl<'a> MatrixImage<'a> {
    fn new(l: &'a LeavittRing) -> Self {
        let g = l.graph();
        let to_sink = l
            .paths_up_to(g.vertex_count())
            .into_iter()
            .filter(|p| g.out_edges(l.range(p)).is_empty())
            .collect();
        MatrixImage { l, to_sink }
    }

    fn image(&self, a: &LpaElement) -> Matrix {
        let ring = self.l.coefficients();
        let mut m = Matrix::new();
        for (alpha, beta, c) in a.terms() {
            for gamma in self.to_sink.iter().filter(|p| p.start() == self.l.range(alpha)) {
                let row: Vec<usize> = alpha.edges().iter().chain(gamma.edges()).copied().collect();
                let col: Vec<usize> = beta.edges().iter().chain(gamma.edges()).copied().collect();
                let key = (row, alpha.start(), col, beta.start());
                let v = ring.add(m.get(&key).copied().unwrap_or(ring.zero()), c);
                m.insert(key, v);
            }
        }
        m.retain(|_, v| *v != ring.zero());
        m
    }

    fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let ring = self.l.coefficients();
        let mut m = Matrix::new();
        for ((r, rs, k, ks), &x) in a {
            for ((k2, k2s, c, cs), &y) in b {
                if k == k2 && ks == k2s {
                    let key = (r.clone(), *rs, c.clone(), *cs);
                    let v = ring.add(m.get(&key).copied().unwrap_or(ring.zero()), ring.mul(x, y));
                    m.insert(key, v);
                }
            }
        }
        m.retain(|_, v| *v != ring.zero());
        m
    }
}

#[test]
fn products_agree_with_matrix_representation() {
    let l = lpa(DIAMOND, "zmod(3)");
    let oracle = MatrixImage::new(&l);
    let monos = monomials(&l, 2);
    let elems: Vec<LpaElement> = monos
        .iter()
        .flat_map(|(a, b)| [l.monomial(1, a, b).unwrap(), l.monomial(2, a, b).unwrap()])
        .collect();
    for x in &elems {
        assert!(!x.is_zero());
        for y in &elems {
            let prod = l.mul(x, y).unwrap();
            assert_eq!(oracle.image(&prod), oracle.mul(&oracle.image(x), &oracle.image(y)));
        }
    }
}

#[test]
fn normal_form_monomials_are_distinct_and_nonzero() {
    for graph in [DIAMOND, LOOPS] {
        let l = lpa(graph, "gf(4)");
        let mut seen = Vec::new();
        for (a, b) in monomials(&l, 3) {
            for r in 1..4 {
                let m = l.monomial(r, &a, &b).unwrap();
                assert!(!m.is_zero());
                let normal = m.len() == 1 && m.terms().next().map(|(x, y, _)| (x, y)) == Some((&a, &b));
                if normal {
                    seen.push(m);
                }
            }
        }
        let n = seen.len();
        seen.sort_by_key(|m| format!("{m:?}"));
        seen.dedup();
        assert_eq!(seen.len(), n);
    }
}

#[test]
fn corner_reduction() {
    let l = lpa(LOOPS, "gf(2)");
    let v = l.vertex(0);
    let w = l.corner_reduce(&v, 6).unwrap().unwrap();
    assert_eq!((w.alpha.clone(), w.beta.clone(), w.vertex), (Path::vertex(0), Path::vertex(0), 0));
    let f = l.graph().edge_index("f").unwrap();
    let w = l.corner_reduce(&l.edge(f), 6).unwrap().unwrap();
    assert_eq!(w.alpha, l.edge_path(f));
    assert_eq!(w.beta, Path::vertex(1));
    assert_eq!(l.corner_reduce(&l.sub(&v, &v), 6).unwrap_err(), Error::Precondition("corner reduction needs a nonzero element".into()));

    let x = l.add(&l.edge(0), &l.mul(&l.edge(1), &l.ghost(1)).unwrap());
    let w = l.corner_reduce(&x, 4).unwrap().unwrap();
    let got = l
        .mul3(&l.ghost_of(&w.alpha), &x, &l.real_of(&w.beta))
        .unwrap();
    let expect = l.monomial(w.coeff, &Path::vertex(w.vertex), &Path::vertex(w.vertex)).unwrap();
    assert_eq!(got, expect);
}

#[test]
fn corner_orthogonality() {
    let isolated = lpa("vertex v\nvertex w\n", "gf(2)");
    assert!(isolated.verify_corner_orthogonality(0, 1, 4).unwrap());
    let joined = lpa("vertex v\nvertex u\nvertex w\nedge f: v -> u\nedge g: w -> u\n", "gf(2)");
    assert!(matches!(joined.verify_corner_orthogonality(0, 2, 4), Err(Error::Precondition(_))));
    let cycles = lpa(
        "vertex a\nvertex b\nvertex c\nvertex d\nedge f: a -> b\nedge g: b -> a\nedge h: c -> d\nedge k: d -> c\n",
        "gf(2)",
    );
    match cycles.graph().satisfies_mt3().unwrap() {
        Mt3::Violated(v, w) => assert!(cycles.verify_corner_orthogonality(v, w, 4).unwrap()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn primeness_examples() {
    let gf2 = build_ring("gf(2)", Limits::default()).unwrap();
    let loop_graph = DirectedGraph::parse("vertex v\nedge e: v -> v\n").unwrap();
    assert!(is_leavitt_prime(&loop_graph, &gf2).unwrap().is_prime());
    let isolated = DirectedGraph::parse("vertex v\nvertex w\n").unwrap();
    let verdict = is_leavitt_prime(&isolated, &gf2).unwrap();
    assert_eq!(verdict.mt3, Mt3::Violated(0, 1));
    assert!(!verdict.is_prime());
    let single = DirectedGraph::parse("vertex v\n").unwrap();
    let prod = build_ring("product(gf(2),gf(2))", Limits::default()).unwrap();
    let verdict = is_leavitt_prime(&single, &prod).unwrap();
    assert!(verdict.mt3.holds() && !verdict.coefficients_prime && !verdict.is_prime());
    let nonunital = build_ring("subring(zmod(4),[0,2])", Limits::default()).unwrap();
    assert!(matches!(is_leavitt_prime(&single, &nonunital), Err(Error::Precondition(_))));
}

#[test]
fn foreign_elements_rejected() {
    let small = lpa("vertex v\n", "gf(2)");
    let big = lpa(LOOPS, "gf(2)");
    assert!(matches!(small.mul(&big.edge(2), &small.vertex(0)), Err(Error::InvalidElement(_))));
}

fn loops_ring() -> LeavittRing {
    lpa(LOOPS, "zmod(3)")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_is_associative_and_graded(
        picks in proptest::collection::vec((0usize..10_000, 1usize..3), 3)
    ) {
        let l = loops_ring();
        let monos = monomials(&l, 3);
        let el: Vec<LpaElement> = picks
            .iter()
            .map(|&(i, r)| {
                let (a, b) = &monos[i % monos.len()];
                l.monomial(r, a, b).unwrap()
            })
            .collect();
        let left = l.mul(&l.mul(&el[0], &el[1]).unwrap(), &el[2]).unwrap();
        let right = l.mul(&el[0], &l.mul(&el[1], &el[2]).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let ab = l.mul(&el[0], &el[1]).unwrap();
        if !ab.is_zero() {
            prop_assert_eq!(l.degree(&ab), Some(l.degree(&el[0]).unwrap() + l.degree(&el[1]).unwrap()));
        }
        let sum = l.add(&el[1], &el[2]);
        let distributed = l.add(&l.mul(&el[0], &el[1]).unwrap(), &l.mul(&el[0], &el[2]).unwrap());
        prop_assert_eq!(l.mul(&el[0], &sum).unwrap(), distributed);
    }
}
