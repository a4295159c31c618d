//! Finite valued quivers: data model, the line-oriented DSL, opposite
//! quiver, connectivity, cycle enumeration and DOT output.
//!
//! A valued quiver carries at most one arrow per ordered vertex pair; the
//! label `(d1, d2)` stores the two Ext-dimension values. Infinite line
//! families are representable only through a [`FamilyDecl`] window.

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// Vertex name: a nonempty whitespace-free token, unique within a quiver.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(!name.is_empty() && !name.chars().any(|c| c.is_whitespace()));
        VertexId(name)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A labelled arrow `src -> dst` with value `(d1, d2)`, both positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuedArrow {
    pub src: VertexId,
    pub dst: VertexId,
    pub d1: u64,
    pub d2: u64,
}

/// Declared infinite line family; the stored quiver is a finite window of it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FamilyKind {
    LineBiInfinite,
    LineRightInfinite,
    LineLeftInfinite,
}

impl FamilyKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "LineBiInfinite" => Some(FamilyKind::LineBiInfinite),
            "LineRightInfinite" => Some(FamilyKind::LineRightInfinite),
            "LineLeftInfinite" => Some(FamilyKind::LineLeftInfinite),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::LineBiInfinite => "LineBiInfinite",
            FamilyKind::LineRightInfinite => "LineRightInfinite",
            FamilyKind::LineLeftInfinite => "LineLeftInfinite",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyDecl {
    pub kind: FamilyKind,
    /// The finite vertex list this concrete quiver represents.
    pub window: Vec<VertexId>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValuedQuiver {
    vertices: BTreeSet<VertexId>,
    arrows: BTreeMap<(VertexId, VertexId), (u64, u64)>,
    pub family: Option<FamilyDecl>,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum QuiverError {
    #[error("syntax error at line {0}: {1}")]
    Syntax(usize, String),
    #[error("duplicate arrow {0} -> {1}")]
    DuplicateArrow(VertexId, VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("bad label component {0} (must be a positive integer)")]
    BadLabel(String),
}

impl ValuedQuiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<(), QuiverError> {
        if !self.vertices.insert(v.clone()) {
            return Err(QuiverError::DuplicateVertex(v));
        }
        Ok(())
    }

    pub fn add_arrow(
        &mut self,
        src: VertexId,
        dst: VertexId,
        d1: u64,
        d2: u64,
    ) -> Result<(), QuiverError> {
        if !self.vertices.contains(&src) {
            return Err(QuiverError::UnknownVertex(src));
        }
        if !self.vertices.contains(&dst) {
            return Err(QuiverError::UnknownVertex(dst));
        }
        if d1 == 0 || d2 == 0 {
            return Err(QuiverError::BadLabel("0".into()));
        }
        if self.arrows.contains_key(&(src.clone(), dst.clone())) {
            return Err(QuiverError::DuplicateArrow(src, dst));
        }
        self.arrows.insert((src, dst), (d1, d2));
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ValuedArrow> + '_ {
        self.arrows.iter().map(|((s, d), &(d1, d2))| ValuedArrow {
            src: s.clone(),
            dst: d.clone(),
            d1,
            d2,
        })
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn label(&self, src: &VertexId, dst: &VertexId) -> Option<(u64, u64)> {
        self.arrows.get(&(src.clone(), dst.clone())).copied()
    }

    pub fn out_arrows(&self, v: &VertexId) -> Vec<ValuedArrow> {
        self.arrows().filter(|a| &a.src == v).collect()
    }

    pub fn in_arrows(&self, v: &VertexId) -> Vec<ValuedArrow> {
        self.arrows().filter(|a| &a.dst == v).collect()
    }

    /// True when every label equals `(m, m)` for some `m`; such a quiver
    /// encodes a pointed path coalgebra with `m` parallel arrows.
    pub fn is_pointed(&self) -> bool {
        self.arrows.values().all(|&(d1, d2)| d1 == d2)
    }

    /// Arrow reversal with label swap: `x -> y (d1,d2)` becomes `y -> x (d2,d1)`.
    pub fn opposite(&self) -> ValuedQuiver {
        let mut q = ValuedQuiver {
            vertices: self.vertices.clone(),
            arrows: BTreeMap::new(),
            family: self.family.clone(),
        };
        for ((s, d), &(d1, d2)) in self.arrows.iter() {
            q.arrows.insert((d.clone(), s.clone()), (d2, d1));
        }
        q
    }

    /// Weakly connected components, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        let mut neighbors: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
        for (s, d) in self.arrows.keys() {
            neighbors.entry(s).or_default().push(d);
            neighbors.entry(d).or_default().push(s);
        }
        for v in self.vertices.iter() {
            if seen.contains(v) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop_front() {
                comp.push(u.clone());
                for &w in neighbors.get(u).into_iter().flatten() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Directed path of length >= 1 from `x` to `y`; `x == y` needs a cycle.
    pub fn reachable(&self, x: &VertexId, y: &VertexId) -> Result<bool, QuiverError> {
        for v in [x, y] {
            if !self.vertices.contains(v) {
                return Err(QuiverError::UnknownVertex(v.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<VertexId> = self.out_arrows(x).into_iter().map(|a| a.dst).collect();
        while let Some(v) = queue.pop_front() {
            if &v == y {
                return Ok(true);
            }
            if seen.insert(v.clone()) {
                for a in self.out_arrows(&v) {
                    queue.push_back(a.dst);
                }
            }
        }
        Ok(false)
    }

    /// All simple directed cycles, each reported once, rotated so the least
    /// vertex comes first; loops are length-1 cycles. Output is sorted.
    pub fn cycle_census(&self) -> Vec<Vec<VertexId>> {
        let verts: Vec<&VertexId> = self.vertices.iter().collect();
        let index: BTreeMap<&VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut cycles = Vec::new();
        // Cycles whose least vertex is `start`: DFS over vertices >= start.
        for (start_idx, &start) in verts.iter().enumerate() {
            let mut path = vec![start.clone()];
            let mut on_path: BTreeSet<VertexId> = BTreeSet::from([start.clone()]);
            self.census_dfs(
                start,
                start_idx,
                &index,
                &mut path,
                &mut on_path,
                &mut cycles,
            );
        }
        cycles.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        cycles
    }

    fn census_dfs(
        &self,
        start: &VertexId,
        start_idx: usize,
        index: &BTreeMap<&VertexId, usize>,
        path: &mut Vec<VertexId>,
        on_path: &mut BTreeSet<VertexId>,
        cycles: &mut Vec<Vec<VertexId>>,
    ) {
        let current = path.last().unwrap().clone();
        for a in self.out_arrows(&current) {
            if &a.dst == start {
                cycles.push(path.clone());
            } else if index[&a.dst] > start_idx && !on_path.contains(&a.dst) {
                path.push(a.dst.clone());
                on_path.insert(a.dst.clone());
                self.census_dfs(start, start_idx, index, path, on_path, cycles);
                on_path.remove(&a.dst);
                path.pop();
            }
        }
    }

    /// Deterministic Graphviz output; identical quivers yield identical bytes.
    pub fn emit_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in self.vertices.iter() {
            out.push_str(&format!("  {};\n", dot_id(v.as_str())));
        }
        for ((s, d), &(d1, d2)) in self.arrows.iter() {
            out.push_str(&format!(
                "  {} -> {} [label=\"({},{})\"];\n",
                dot_id(s.as_str()),
                dot_id(d.as_str()),
                d1,
                d2
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Deterministic DSL serialization; parses back to an identical quiver.
    pub fn emit_dsl(&self) -> String {
        let mut out = String::new();
        for v in self.vertices.iter() {
            out.push_str(&format!("vertex {}\n", v));
        }
        for ((s, d), &(d1, d2)) in self.arrows.iter() {
            if (d1, d2) == (1, 1) {
                out.push_str(&format!("arrow {} {}\n", s, d));
            } else {
                out.push_str(&format!("arrow {} {} {} {}\n", s, d, d1, d2));
            }
        }
        if let Some(fam) = &self.family {
            out.push_str(&format!("family {}\n", fam.kind.name()));
        }
        out
    }
}

fn dot_id(s: &str) -> String {
    let plain = !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !s.chars().next().unwrap().is_ascii_digit();
    let numeral = !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    if plain || numeral {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\"', "\\\""))
    }
}

/// Parse the line-oriented quiver DSL:
/// `vertex <name>`, `arrow <src> <dst> [<d1> <d2>]`, `family <kind>`,
/// `#` comments and blank lines.
pub fn parse_quiver(text: &str) -> Result<ValuedQuiver, QuiverError> {
    let mut q = ValuedQuiver::new();
    let mut family_kind = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "vertex" => {
                if toks.len() != 2 {
                    return Err(QuiverError::Syntax(lineno, "vertex <name>".into()));
                }
                q.add_vertex(VertexId::new(toks[1]))?;
            }
            "arrow" => {
                let (d1, d2) = match toks.len() {
                    3 => (1, 1),
                    5 => (parse_label(toks[3])?, parse_label(toks[4])?),
                    _ => {
                        return Err(QuiverError::Syntax(
                            lineno,
                            "arrow <src> <dst> [<d1> <d2>]".into(),
                        ))
                    }
                };
                q.add_arrow(VertexId::new(toks[1]), VertexId::new(toks[2]), d1, d2)?;
            }
            "family" => {
                if toks.len() != 2 {
                    return Err(QuiverError::Syntax(lineno, "family <kind>".into()));
                }
                family_kind = Some(FamilyKind::parse(toks[1]).ok_or_else(|| {
                    QuiverError::Syntax(lineno, format!("unknown family kind {}", toks[1]))
                })?);
            }
            other => {
                return Err(QuiverError::Syntax(
                    lineno,
                    format!("unknown directive {other}"),
                ));
            }
        }
    }
    if let Some(kind) = family_kind {
        q.family = Some(FamilyDecl {
            kind,
            window: q.vertices.iter().cloned().collect(),
        });
    }
    Ok(q)
}

fn parse_label(s: &str) -> Result<u64, QuiverError> {
    match s.parse::<u64>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(QuiverError::BadLabel(s.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::new(s)
    }

    #[test]
    fn parse_basic() {
        let q = parse_quiver("vertex a\nvertex b\narrow a b 1 2").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.label(&v("a"), &v("b")), Some((1, 2)));
    }

    #[test]
    fn parse_default_label_loop() {
        let q = parse_quiver("vertex a\narrow a a").unwrap();
        assert_eq!(q.label(&v("a"), &v("a")), Some((1, 1)));
    }

    #[test]
    fn parse_unknown_vertex() {
        let err = parse_quiver("vertex a\narrow a b 1 1").unwrap_err();
        assert_eq!(err, QuiverError::UnknownVertex(v("b")));
    }

    #[test]
    fn parse_rejects_multiarrow_and_bad_label() {
        let err = parse_quiver("vertex a\nvertex b\narrow a b\narrow a b").unwrap_err();
        assert_eq!(err, QuiverError::DuplicateArrow(v("a"), v("b")));
        let err = parse_quiver("vertex a\narrow a a 0 1").unwrap_err();
        assert!(matches!(err, QuiverError::BadLabel(_)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let q = parse_quiver("# crown\n\nvertex a\n  # inner\nvertex b\narrow a b\narrow b a\n")
            .unwrap();
        assert_eq!(q.arrow_count(), 2);
    }

    #[test]
    fn opposite_swaps_labels() {
        let q = parse_quiver("vertex a\nvertex b\narrow a b 1 2").unwrap();
        let op = q.opposite();
        assert_eq!(op.label(&v("b"), &v("a")), Some((2, 1)));
        assert_eq!(op.opposite(), q);
        // loop with symmetric label is a fixed point
        let l = parse_quiver("vertex a\narrow a a").unwrap();
        assert_eq!(l.opposite(), l);
    }

    #[test]
    fn components() {
        let q =
            parse_quiver("vertex a\nvertex b\nvertex c\nvertex d\narrow a b\narrow c d").unwrap();
        assert_eq!(
            q.connected_components(),
            vec![vec![v("a"), v("b")], vec![v("c"), v("d")]]
        );
        assert!(ValuedQuiver::new().connected_components().is_empty());
    }

    #[test]
    fn reachability_line() {
        let q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3").unwrap();
        assert!(q.reachable(&v("1"), &v("3")).unwrap());
        assert!(!q.reachable(&v("3"), &v("1")).unwrap());
        assert!(!q.reachable(&v("1"), &v("1")).unwrap());
        assert!(q.reachable(&v("9"), &v("1")).is_err());
    }

    #[test]
    fn cycle_census_cases() {
        let line = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3").unwrap();
        assert!(line.cycle_census().is_empty());

        let crown4 = parse_quiver(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow 1 2\narrow 2 3\narrow 3 4\narrow 4 1",
        )
        .unwrap();
        let cs = crown4.cycle_census();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 4);

        let lp = parse_quiver("vertex a\narrow a a").unwrap();
        assert_eq!(lp.cycle_census(), vec![vec![v("a")]]);
    }

    #[test]
    fn dot_output() {
        let q = parse_quiver("vertex a\nvertex b\narrow a b 1 2").unwrap();
        let dot = q.emit_dot();
        assert!(dot.contains("a -> b [label=\"(1,2)\"]"));
        assert_eq!(ValuedQuiver::new().emit_dot(), "digraph quiver {\n}\n");
    }

    #[test]
    fn dsl_roundtrip() {
        let src = "vertex a\nvertex b\narrow a b 2 3\nfamily LineBiInfinite\n";
        let q = parse_quiver(src).unwrap();
        let q2 = parse_quiver(&q.emit_dsl()).unwrap();
        assert_eq!(q, q2);
    }
}
