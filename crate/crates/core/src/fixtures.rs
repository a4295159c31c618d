//! Named fixture quivers used by the CLI generator and the test suites.

use crate::quiver::{ValuedQuiver, VertexId};

/// Simple directed line 1 -> 2 -> ... -> n with labels (1,1).
pub fn line(n: usize) -> ValuedQuiver {
    assert!(n >= 1);
    let mut q = ValuedQuiver::new();
    for i in 1..=n {
        q.add_vertex(VertexId::new(i.to_string())).unwrap();
    }
    for i in 1..n {
        q.add_arrow(
            VertexId::new(i.to_string()),
            VertexId::new((i + 1).to_string()),
            1,
            1,
        )
        .unwrap();
    }
    q
}

/// Crown on n vertices: the directed cycle 1 -> 2 -> ... -> n -> 1.
pub fn crown(n: usize) -> ValuedQuiver {
    assert!(n >= 1);
    let mut q = line(n);
    if n == 1 {
        q.add_arrow(VertexId::new("1"), VertexId::new("1"), 1, 1)
            .unwrap();
    } else {
        q.add_arrow(VertexId::new(n.to_string()), VertexId::new("1"), 1, 1)
            .unwrap();
    }
    q
}

/// One vertex with loop label (2,2): two parallel loops, pointed.
pub fn two_loop() -> ValuedQuiver {
    let mut q = ValuedQuiver::new();
    q.add_vertex(VertexId::new("a")).unwrap();
    q.add_arrow(VertexId::new("a"), VertexId::new("a"), 2, 2)
        .unwrap();
    q
}

/// The wedge 1 -> 3 <- 2: left serial but not right serial.
pub fn vee() -> ValuedQuiver {
    let mut q = ValuedQuiver::new();
    for name in ["1", "2", "3"] {
        q.add_vertex(VertexId::new(name)).unwrap();
    }
    q.add_arrow(VertexId::new("1"), VertexId::new("3"), 1, 1)
        .unwrap();
    q.add_arrow(VertexId::new("2"), VertexId::new("3"), 1, 1)
        .unwrap();
    q
}

/// 1 -> 2 -> 3 plus the shortcut 1 -> 3; localizing away 2 doubles the
/// label on the surviving arrow.
pub fn triangle() -> ValuedQuiver {
    let mut q = line(3);
    q.add_arrow(VertexId::new("1"), VertexId::new("3"), 1, 1)
        .unwrap();
    q
}

/// An n-vertex window of the bi-infinite line, declared as such.
pub fn window_biinfinite(n: usize) -> ValuedQuiver {
    crate::quiver::parse_quiver(&window_biinfinite_dsl(n)).unwrap()
}

fn window_biinfinite_dsl(n: usize) -> String {
    assert!(n >= 1);
    let mut out = String::from("family LineBiInfinite\n");
    for i in 1..=n {
        out.push_str(&format!("vertex {}\n", i));
    }
    for i in 1..n {
        out.push_str(&format!("arrow {} {}\n", i, i + 1));
    }
    out
}

/// Look up a fixture by its display name, e.g. "crown(3)" or "vee".
pub fn by_name(name: &str) -> Option<ValuedQuiver> {
    match name {
        "two-loop" => return Some(two_loop()),
        "vee" => return Some(vee()),
        "triangle" => return Some(triangle()),
        _ => {}
    }
    let (kind, arg) = name.strip_suffix(')')?.split_once('(')?;
    let n: usize = arg.parse().ok().filter(|&n| n >= 1)?;
    match kind {
        "line" => Some(line(n)),
        "crown" => Some(crown(n)),
        "window-biinfinite" => Some(window_biinfinite(n)),
        _ => None,
    }
}

pub fn fixture_names() -> Vec<&'static str> {
    vec![
        "line(n)",
        "crown(n)",
        "two-loop",
        "vee",
        "triangle",
        "window-biinfinite(n)",
    ]
}
