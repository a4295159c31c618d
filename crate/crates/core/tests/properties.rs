//! Property-based invariants of the quiver data model.

use coserial_core::quiver::{parse_quiver, ValuedQuiver, VertexId};
use coserial_core::{is_left_serial, is_right_serial};
use proptest::prelude::*;

fn quiver_strategy() -> impl Strategy<Value = ValuedQuiver> {
    (
        1usize..=6,
        prop::collection::vec((0usize..6, 0usize..6, 1u64..=3, 1u64..=3), 0..14),
    )
        .prop_map(|(n, raw)| {
            let mut q = ValuedQuiver::new();
            for i in 0..n {
                q.add_vertex(VertexId::new(format!("v{}", i))).unwrap();
            }
            for (s, d, d1, d2) in raw {
                if s < n && d < n {
                    // duplicate ordered pairs are rejected; skip them
                    let _ = q.add_arrow(
                        VertexId::new(format!("v{}", s)),
                        VertexId::new(format!("v{}", d)),
                        d1,
                        d2,
                    );
                }
            }
            q
        })
}

proptest! {
    #[test]
    fn opposite_is_an_involution(q in quiver_strategy()) {
        prop_assert_eq!(q.opposite().opposite(), q);
    }

    #[test]
    fn opposite_preserves_cycle_length_multiset(q in quiver_strategy()) {
        let mut lens: Vec<usize> = q.cycle_census().iter().map(|c| c.len()).collect();
        let mut op_lens: Vec<usize> =
            q.opposite().cycle_census().iter().map(|c| c.len()).collect();
        lens.sort_unstable();
        op_lens.sort_unstable();
        prop_assert_eq!(lens, op_lens);
    }

    #[test]
    fn dsl_round_trips(q in quiver_strategy()) {
        let text = q.emit_dsl();
        let back = parse_quiver(&text).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(parse_quiver(&back.emit_dsl()).unwrap(), q);
    }

    #[test]
    fn left_serial_is_right_serial_of_opposite(q in quiver_strategy()) {
        prop_assert_eq!(is_left_serial(&q), is_right_serial(&q.opposite()));
    }

    #[test]
    fn dot_output_is_deterministic(q in quiver_strategy()) {
        prop_assert_eq!(q.emit_dot(), q.emit_dot());
    }
}
