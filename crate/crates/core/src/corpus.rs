//! Small standard rings, gradings, graphs and filters used for exhaustive
//! testing.

use std::collections::BTreeMap;

use crate::elemset::ElemSet;
use crate::finring::{build_ring, FiniteRing, Limits};
use crate::grading::GradedRing;
use crate::grfilter::{FilterRule, GFilter};
use crate::group::{FiniteGroup, GradingGroup, GroupElem};
use crate::leavitt::DirectedGraph;

/// Ring expressions of the standard corpus.
pub const RINGS: &[&str] = &[
    "gf(2)",
    "gf(3)",
    "gf(4)",
    "zmod(4)",
    "zmod(6)",
    "product(gf(2),gf(2))",
    "mat(gf(2),2)",
    "tri(gf(2),2)",
    "tri(gf(2),3)",
    "grpalg(gf(2),cyclic(2))",
    "grpalg(gf(3),cyclic(2))",
    "subring(zmod(8),[0,2,4,6])",
];

/// The first-row ring `{[[a, b], [0, 0]]}` over `gf(2)`.
pub const FIRST_ROW: &str = "subring(tri(gf(2),2),[0,2,4,6])";

pub fn rings() -> Vec<(&'static str, FiniteRing)> {
    RINGS
        .iter()
        .map(|&s| (s, build_ring(s, Limits::default()).expect("corpus ring")))
        .collect()
}

fn cyclic(n: usize) -> GradingGroup {
    GradingGroup::Finite(FiniteGroup::cyclic(n).expect("cyclic group"))
}

/// Grading of `mat(R, n)` or `tri(R, n)` where entry `(i, j)` sits in
/// degree `degree(i, j)`.
pub fn matrix_grading<F>(base: &str, n: usize, triangular: bool, group: GradingGroup, degree: F) -> GradedRing
where
    F: Fn(usize, usize) -> GroupElem,
{
    let kind = if triangular { "tri" } else { "mat" };
    let ring = build_ring(&format!("{kind}({base},{n})"), Limits::default()).expect("matrix ring");
    let q = build_ring(base, Limits::default()).expect("base ring").order();
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !triangular || i <= j)
        .collect();
    let mut comps: BTreeMap<GroupElem, ElemSet> = BTreeMap::new();
    for idx in ring.elements() {
        // Digits base q, first position most significant.
        let mut rest = idx;
        let mut digits = vec![0; positions.len()];
        for d in digits.iter_mut().rev() {
            *d = rest % q;
            rest /= q;
        }
        let degrees: Vec<GroupElem> = positions
            .iter()
            .zip(&digits)
            .filter(|(_, &d)| d != 0)
            .map(|(&(i, j), _)| degree(i, j))
            .collect();
        let targets: Vec<GroupElem> = if degrees.is_empty() {
            positions.iter().map(|&(i, j)| degree(i, j)).collect()
        } else if degrees.iter().all(|&d| d == degrees[0]) {
            vec![degrees[0]]
        } else {
            Vec::new()
        };
        for d in targets {
            comps
                .entry(d)
                .or_insert_with(|| ElemSet::empty(ring.order()))
                .insert(idx);
        }
    }
    GradedRing::attach(ring, group, comps).expect("matrix grading")
}

/// `R[C_m]` graded by the group: `S_g` is the coefficient line at `g`.
pub fn group_algebra_grading(base: &str, m: usize) -> GradedRing {
    let ring = build_ring(&format!("grpalg({base},cyclic({m}))"), Limits::default()).expect("group algebra");
    let q = build_ring(base, Limits::default()).expect("base ring").order();
    let mut comps = BTreeMap::new();
    for g in 0..m {
        let place = q.pow((m - 1 - g) as u32);
        let members = (0..q).map(|c| c * place);
        comps.insert(g as GroupElem, ElemSet::from_indices(ring.order(), members));
    }
    GradedRing::attach(ring, cyclic(m), comps).expect("group algebra grading")
}

/// Named graded rings: standard gradings of the corpus, trivial gradings
/// of every corpus ring by `ℤ`, and a few filter rings.
pub fn gradings() -> Vec<(String, GradedRing)> {
    let mut out = vec![
        (
            "tri(gf(2),2) by Z".to_string(),
            matrix_grading("gf(2)", 2, true, GradingGroup::Integers, |i, j| (j - i) as GroupElem),
        ),
        (
            "tri(gf(2),3) by Z".to_string(),
            matrix_grading("gf(2)", 3, true, GradingGroup::Integers, |i, j| (j - i) as GroupElem),
        ),
        (
            "mat(gf(2),2) by Z".to_string(),
            matrix_grading("gf(2)", 2, false, GradingGroup::Integers, |i, j| j as GroupElem - i as GroupElem),
        ),
        (
            "mat(gf(2),2) by C2".to_string(),
            matrix_grading("gf(2)", 2, false, cyclic(2), |i, j| ((i + j) % 2) as GroupElem),
        ),
        (
            "tri(gf(2),2) by C2".to_string(),
            matrix_grading("gf(2)", 2, true, cyclic(2), |i, j| ((j - i) % 2) as GroupElem),
        ),
        ("grpalg(gf(2),cyclic(2)) by C2".to_string(), group_algebra_grading("gf(2)", 2)),
        ("grpalg(gf(3),cyclic(2)) by C2".to_string(), group_algebra_grading("gf(3)", 2)),
    ];
    for (name, ring) in rings() {
        out.push((
            format!("{name} trivially by Z"),
            GradedRing::trivial(ring, GradingGroup::Integers).expect("trivial grading"),
        ));
    }
    let first_row = build_ring(FIRST_ROW, Limits::default()).expect("first-row ring");
    out.push((
        format!("{FIRST_ROW} trivially by Z"),
        GradedRing::trivial(first_row.clone(), GradingGroup::Integers).expect("trivial grading"),
    ));
    let full = GFilter::full(first_row, cyclic(2)).expect("filter");
    out.push((
        format!("{FIRST_ROW}[C2]"),
        full.build_subring(Limits::default()).expect("filter ring"),
    ));
    out
}

/// Corpus gradings by `ℤ`.
pub fn z_gradings() -> Vec<(String, GradedRing)> {
    gradings()
        .into_iter()
        .filter(|(_, g)| matches!(g.group(), GradingGroup::Integers))
        .collect()
}

/// Named graphs, including parallel edges.
pub fn named_graphs() -> Vec<(&'static str, DirectedGraph)> {
    let parse = |s: &str| DirectedGraph::parse(s).expect("named graph");
    vec![
        ("single vertex", parse("vertex v\n")),
        ("single loop", parse("vertex v\nedge e: v -> v\n")),
        ("two isolated", parse("vertex v\nvertex w\n")),
        ("edge", parse("vertex v\nvertex w\nedge f: v -> w\n")),
        ("joined", parse("vertex v\nvertex u\nvertex w\nedge f: v -> u\nedge g: w -> u\n")),
        ("two-cycle", parse("vertex v\nvertex w\nedge f: v -> w\nedge g: w -> v\n")),
        (
            "disjoint two-cycles",
            parse("vertex a\nvertex b\nvertex c\nvertex d\nedge f: a -> b\nedge g: b -> a\nedge h: c -> d\nedge k: d -> c\n"),
        ),
        ("rose", parse("vertex v\nedge e: v -> v\nedge f: v -> v\n")),
        (
            "diamond",
            parse("vertex a\nvertex b\nvertex c\nvertex d\nedge f1: a -> b\nedge f2: a -> b\nedge g: a -> c\nedge h: b -> d\nedge k: c -> d\n"),
        ),
        (
            "loops",
            parse("vertex v\nvertex w\nedge e: v -> v\nedge f: v -> w\nedge g: w -> v\nedge l: w -> w\n"),
        ),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Graphs without parallel edges (loops allowed) on `1..=max_vertices`
/// vertices with at most `max_edges` edges, one per isomorphism class.
/// Each graph is the representative whose adjacency bitmask is least.
pub fn small_graphs(max_vertices: usize, max_edges: usize) -> Vec<DirectedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        let bits = n * n;
        for mask in 0u32..(1u32 << bits) {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let permuted = |p: &[usize]| {
                let mut m = 0u32;
                for u in 0..n {
                    for v in 0..n {
                        if mask & (1 << (u * n + v)) != 0 {
                            m |= 1 << (p[u] * n + p[v]);
                        }
                    }
                }
                m
            };
            if perms.iter().any(|p| permuted(p) < mask) {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..bits)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| (b / n, b % n))
                .collect();
            out.push(DirectedGraph::from_indices(n, &edges).expect("small graph"));
        }
    }
    out
}

/// Named graphs followed by all small graphs up to 4 vertices and 5
/// edges.
pub fn graphs() -> Vec<(String, DirectedGraph)> {
    let mut out: Vec<(String, DirectedGraph)> = named_graphs()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    for (k, g) in small_graphs(4, 5).into_iter().enumerate() {
        out.push((format!("small graph {k}"), g));
    }
    out
}

/// All additive subgroups of a finite ring, in canonical order.
pub fn additive_subgroups(ring: &FiniteRing) -> Vec<ElemSet> {
    let mut found = vec![ring.zero_set()];
    let mut i = 0;
    while i < found.len() {
        let current = found[i].clone();
        for a in ring.elements() {
            if current.contains(a) {
                continue;
            }
            let mut next = current.clone();
            next.insert(a);
            let closed = ring.additive_closure(&next);
            if !found.contains(&closed) {
                found.push(closed);
            }
        }
        i += 1;
    }
    found.sort();
    found
}

/// Every family `(I_x)` over the cyclic group of order `m` with
/// `I_e = R` and each `I_x` drawn from `choices`.
pub fn filter_families(ring: &FiniteRing, m: usize, choices: &[ElemSet]) -> Vec<GFilter> {
    let mut out = Vec::new();
    let mut pick = vec![0usize; m.saturating_sub(1)];
    loop {
        let mut table = vec![ring.full_set()];
        table.extend(pick.iter().map(|&k| choices[k].clone()));
        out.push(GFilter::new(ring.clone(), cyclic(m), FilterRule::Table(table)).expect("well-shaped filter"));
        let mut i = 0;
        loop {
            if i == pick.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < choices.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// All valid filters of ideals on `product(gf(2),gf(2))` over `C2` and
/// `C3`, and on `gf(2)` over `C2`.
pub fn finite_filters() -> Vec<(String, GFilter)> {
    let mut out = Vec::new();
    for (ring_spec, m) in [("product(gf(2),gf(2))", 2), ("product(gf(2),gf(2))", 3), ("gf(2)", 2)] {
        let ring = build_ring(ring_spec, Limits::default()).expect("filter ring");
        let ideals: Vec<ElemSet> = ring
            .all_ideals()
            .expect("ideal lattice")
            .into_iter()
            .map(|i| i.into_members())
            .collect();
        for f in filter_families(&ring, m, &ideals) {
            if f.validate() {
                let parts: Vec<String> = (0..m as GroupElem).map(|x| f.ideal(x).to_string()).collect();
                out.push((format!("{ring_spec} over C{m}: {}", parts.join(" ")), f));
            }
        }
    }
    out
}
