//! Quiver-level classification: right/left seriality, the serial shape
//! taxonomy, Hom-computability, representation-directedness, and the
//! prime/hereditary/co-noetherian decision chain.

use crate::localize::{localize_colocal, LocalizationResult};
use crate::quiver::{FamilyKind, ValuedArrow, ValuedQuiver, VertexId};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ClassifyError {
    #[error("input quiver is not serial")]
    NotSerialInput,
    #[error("input quiver is not right serial")]
    NotRightSerialInput,
    #[error("family declaration disagrees with the stored window: {0}")]
    FamilyWindowMismatch(String),
    #[error("input quiver must be connected and nonempty")]
    DisconnectedInput,
}

/// Concrete violation of a seriality condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SerialWitness {
    /// A vertex that is the sink of two or more arrows.
    MultipleIncoming {
        vertex: VertexId,
        sources: Vec<VertexId>,
    },
    /// A vertex that is the source of two or more arrows.
    MultipleOutgoing {
        vertex: VertexId,
        targets: Vec<VertexId>,
    },
    /// An arrow whose first label component is at least 2.
    LabelFirst { arrow: ValuedArrow },
    /// An arrow whose second label component is at least 2.
    LabelSecond { arrow: ValuedArrow },
    /// Connectivity or cycle structure ruling out every serial shape.
    ShapeMismatch { detail: String },
}

impl fmt::Display for SerialWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SerialWitness::MultipleIncoming { vertex, sources } => {
                write!(
                    f,
                    "vertex {} is the sink of {} arrows",
                    vertex,
                    sources.len()
                )
            }
            SerialWitness::MultipleOutgoing { vertex, targets } => {
                write!(
                    f,
                    "vertex {} is the source of {} arrows",
                    vertex,
                    targets.len()
                )
            }
            SerialWitness::LabelFirst { arrow } => write!(
                f,
                "arrow {} -> {} has first label component {}",
                arrow.src, arrow.dst, arrow.d1
            ),
            SerialWitness::LabelSecond { arrow } => write!(
                f,
                "arrow {} -> {} has second label component {}",
                arrow.src, arrow.dst, arrow.d2
            ),
            SerialWitness::ShapeMismatch { detail } => write!(f, "{}", detail),
        }
    }
}

/// `None` means right serial: every vertex has in-degree at most 1 and
/// every arrow label is of the form `(1, d)`.
pub fn right_serial_witness(q: &ValuedQuiver) -> Option<SerialWitness> {
    for v in q.vertices() {
        let incoming = q.in_arrows(v);
        if incoming.len() >= 2 {
            return Some(SerialWitness::MultipleIncoming {
                vertex: v.clone(),
                sources: incoming.into_iter().map(|a| a.src).collect(),
            });
        }
    }
    for a in q.arrows() {
        if a.d1 >= 2 {
            return Some(SerialWitness::LabelFirst { arrow: a });
        }
    }
    None
}

/// `None` means left serial; by duality this is right seriality of the
/// opposite quiver, i.e. out-degree at most 1 and labels `(d, 1)`.
pub fn left_serial_witness(q: &ValuedQuiver) -> Option<SerialWitness> {
    for v in q.vertices() {
        let outgoing = q.out_arrows(v);
        if outgoing.len() >= 2 {
            return Some(SerialWitness::MultipleOutgoing {
                vertex: v.clone(),
                targets: outgoing.into_iter().map(|a| a.dst).collect(),
            });
        }
    }
    for a in q.arrows() {
        if a.d2 >= 2 {
            return Some(SerialWitness::LabelSecond { arrow: a });
        }
    }
    None
}

pub fn is_right_serial(q: &ValuedQuiver) -> bool {
    right_serial_witness(q).is_none()
}

pub fn is_left_serial(q: &ValuedQuiver) -> bool {
    left_serial_witness(q).is_none()
}

/// Shape of one weakly connected component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ShapeClass {
    AN(usize),
    ATilde(usize),
    AInfinityRight,
    AInfinityLeft,
    AInfinityBi,
    NotSerial(SerialWitness),
}

impl ShapeClass {
    pub fn is_serial(&self) -> bool {
        !matches!(self, ShapeClass::NotSerial(_))
    }

    pub fn name(&self) -> String {
        match self {
            ShapeClass::AN(n) => format!("A_{}", n),
            ShapeClass::ATilde(n) => format!("ATilde_{}", n),
            ShapeClass::AInfinityRight => "AInfinityRight".into(),
            ShapeClass::AInfinityLeft => "AInfinityLeft".into(),
            ShapeClass::AInfinityBi => "AInfinityBi".into(),
            ShapeClass::NotSerial(_) => "NotSerial".into(),
        }
    }
}

/// The induced subquiver on a vertex set; the family declaration is not
/// inherited.
pub fn induced_subquiver(q: &ValuedQuiver, verts: &[VertexId]) -> ValuedQuiver {
    let keep: BTreeSet<&VertexId> = verts.iter().collect();
    let mut sub = ValuedQuiver::new();
    for v in verts {
        sub.add_vertex(v.clone())
            .expect("component vertices are distinct");
    }
    for a in q.arrows() {
        if keep.contains(&a.src) && keep.contains(&a.dst) {
            sub.add_arrow(a.src, a.dst, a.d1, a.d2)
                .expect("arrows are distinct");
        }
    }
    sub
}

fn component_shape(comp: &ValuedQuiver) -> ShapeClass {
    if let Some(w) = right_serial_witness(comp) {
        return ShapeClass::NotSerial(w);
    }
    if let Some(w) = left_serial_witness(comp) {
        return ShapeClass::NotSerial(w);
    }
    // Right and left serial with every label (1,1): each vertex has
    // in- and out-degree at most 1, so a connected component is a
    // simple path or a single directed cycle.
    let n = comp.vertices().count();
    let m = comp.arrows().count();
    if m == n {
        ShapeClass::ATilde(n)
    } else if m + 1 == n {
        ShapeClass::AN(n)
    } else {
        ShapeClass::NotSerial(SerialWitness::ShapeMismatch {
            detail: format!(
                "component with {} vertices and {} arrows fits no serial shape",
                n, m
            ),
        })
    }
}

/// Per-component shape classification. A family declaration turns the
/// whole quiver into a window of the declared infinite line; the window
/// must then be a single simple path.
pub fn serial_shape(q: &ValuedQuiver) -> Result<Vec<(Vec<VertexId>, ShapeClass)>, ClassifyError> {
    let comps = q.connected_components();
    if let Some(fam) = &q.family {
        if comps.len() != 1 {
            return Err(ClassifyError::FamilyWindowMismatch(
                "family window must be a single connected component".into(),
            ));
        }
        let shape = component_shape(&induced_subquiver(q, &comps[0]));
        match shape {
            ShapeClass::AN(_) => {
                let infinite = match fam.kind {
                    FamilyKind::LineBiInfinite => ShapeClass::AInfinityBi,
                    FamilyKind::LineRightInfinite => ShapeClass::AInfinityRight,
                    FamilyKind::LineLeftInfinite => ShapeClass::AInfinityLeft,
                };
                return Ok(vec![(comps.into_iter().next().unwrap(), infinite)]);
            }
            _ => {
                return Err(ClassifyError::FamilyWindowMismatch(
                    "family window must be a simple line with labels (1,1)".into(),
                ));
            }
        }
    }
    Ok(comps
        .into_iter()
        .map(|verts| {
            let shape = component_shape(&induced_subquiver(q, &verts));
            (verts, shape)
        })
        .collect())
}

/// Hom-computability for serial quivers: lines of any kind qualify, a
/// crown only when the coalgebra is finite dimensional.
pub fn is_hom_computable_serial(
    q: &ValuedQuiver,
    coalgebra_finite_dimensional: bool,
) -> Result<(bool, String), ClassifyError> {
    let shapes = serial_shape(q)?;
    if shapes.iter().any(|(_, s)| !s.is_serial()) {
        return Err(ClassifyError::NotSerialInput);
    }
    for (_, s) in &shapes {
        if let ShapeClass::ATilde(n) = s {
            if !coalgebra_finite_dimensional {
                return Ok((
                    false,
                    format!(
                        "crown component ATilde_{} with an infinite dimensional coalgebra",
                        n
                    ),
                ));
            }
        }
    }
    Ok((
        true,
        "all components are lines or finite dimensional crowns".into(),
    ))
}

/// Representation-directedness for serial quivers: no crown component.
/// Left and right verdicts coincide.
pub fn is_representation_directed_serial(
    q: &ValuedQuiver,
) -> Result<(bool, String), ClassifyError> {
    let shapes = serial_shape(q)?;
    if shapes.iter().any(|(_, s)| !s.is_serial()) {
        return Err(ClassifyError::NotSerialInput);
    }
    for (_, s) in &shapes {
        if let ShapeClass::ATilde(n) = s {
            return Ok((
                false,
                format!("crown component ATilde_{} admits a cyclic chain", n),
            ));
        }
    }
    Ok((true, "no crown component".into()))
}

/// Cycle structure of a right serial quiver, per component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RightSerialForm {
    Acyclic,
    UniqueCycle {
        cycle: Vec<VertexId>,
    },
    /// More than one cycle under right-seriality; reported as an
    /// internal-consistency alarm rather than asserted impossible.
    MultiCycleAlarm {
        cycles: Vec<Vec<VertexId>>,
    },
}

pub fn right_serial_shape_report(
    q: &ValuedQuiver,
) -> Result<Vec<(Vec<VertexId>, RightSerialForm)>, ClassifyError> {
    if !is_right_serial(q) {
        return Err(ClassifyError::NotRightSerialInput);
    }
    Ok(q.connected_components()
        .into_iter()
        .map(|verts| {
            let sub = induced_subquiver(q, &verts);
            let mut cycles = sub.cycle_census();
            let form = match cycles.len() {
                0 => RightSerialForm::Acyclic,
                1 => RightSerialForm::UniqueCycle {
                    cycle: cycles.pop().unwrap(),
                },
                _ => RightSerialForm::MultiCycleAlarm { cycles },
            };
            (verts, form)
        })
        .collect())
}

/// Verdict of the prime/hereditary/co-noetherian decision chain for a
/// connected quiver read as the Gabriel quiver of a hereditary path
/// coalgebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EgVerdict {
    /// All obstructions absent; the quiver is the crown on `n` vertices
    /// (`0` for the degenerate single vertex without a loop).
    SerialCrown(usize),
    /// No directed path from `from` to `to`.
    PrimeObstruction { from: VertexId, to: VertexId },
    /// A colocal localization has a loop label other than (1,1);
    /// `label = None` records an infinite localized label.
    CoNoetherianObstruction {
        vertex: VertexId,
        label: Option<(u64, u64)>,
    },
    /// The checks passed but the shape is not a crown; outside the
    /// hereditary model this calculus certifies nothing further.
    NotHereditaryModelNote,
}

impl fmt::Display for EgVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EgVerdict::SerialCrown(n) => write!(f, "SerialCrown({})", n),
            EgVerdict::PrimeObstruction { from, to } => {
                write!(f, "PrimeObstruction({},{})", from, to)
            }
            EgVerdict::CoNoetherianObstruction {
                vertex,
                label: Some((d1, d2)),
            } => {
                write!(f, "CoNoetherianObstruction({},({},{}))", vertex, d1, d2)
            }
            EgVerdict::CoNoetherianObstruction {
                vertex,
                label: None,
            } => {
                write!(f, "CoNoetherianObstruction({},infinite)", vertex)
            }
            EgVerdict::NotHereditaryModelNote => write!(f, "NotHereditaryModelNote"),
        }
    }
}

pub fn eg_classify(q: &ValuedQuiver) -> Result<EgVerdict, ClassifyError> {
    let comps = q.connected_components();
    if comps.len() != 1 {
        return Err(ClassifyError::DisconnectedInput);
    }
    let verts: Vec<VertexId> = q.vertices().cloned().collect();

    // colocal case: a big loop label already obstructs co-noetherianness
    if verts.len() == 1 {
        if let Some((d1, d2)) = q.label(&verts[0], &verts[0]) {
            if d1 >= 2 || d2 >= 2 {
                return Ok(EgVerdict::CoNoetherianObstruction {
                    vertex: verts[0].clone(),
                    label: Some((d1, d2)),
                });
            }
        }
    }

    // primeness: every ordered pair of distinct vertices needs a path
    for x in &verts {
        for y in &verts {
            if x != y && !q.reachable(x, y).expect("vertices are in the quiver") {
                return Ok(EgVerdict::PrimeObstruction {
                    from: x.clone(),
                    to: y.clone(),
                });
            }
        }
    }

    // co-noetherianness: every colocal localization must be a single
    // vertex with loop (1,1) or no loop at all
    for x in &verts {
        match localize_colocal(q, x).expect("kept vertex is in the quiver") {
            LocalizationResult::Infinite { .. } => {
                return Ok(EgVerdict::CoNoetherianObstruction {
                    vertex: x.clone(),
                    label: None,
                });
            }
            LocalizationResult::Finite { quiver, .. } => {
                if let Some((d1, d2)) = quiver.label(x, x) {
                    if (d1, d2) != (1, 1) {
                        return Ok(EgVerdict::CoNoetherianObstruction {
                            vertex: x.clone(),
                            label: Some((d1, d2)),
                        });
                    }
                }
            }
        }
    }

    match serial_shape(q)?.pop().map(|(_, s)| s) {
        Some(ShapeClass::ATilde(n)) => Ok(EgVerdict::SerialCrown(n)),
        Some(ShapeClass::AN(1)) => Ok(EgVerdict::SerialCrown(0)),
        _ => Ok(EgVerdict::NotHereditaryModelNote),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<String>,
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// JSON-ready summary with a fixed field order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationReport {
    pub components: Vec<ComponentReport>,
    pub right_serial: bool,
    pub left_serial: bool,
    pub hom_computable: bool,
    pub representation_directed: bool,
    pub eg: String,
}

pub fn classification_report(
    q: &ValuedQuiver,
    coalgebra_finite_dimensional: bool,
) -> Result<ClassificationReport, ClassifyError> {
    let shapes = serial_shape(q)?;
    let components = shapes
        .iter()
        .map(|(verts, shape)| ComponentReport {
            vertices: verts.iter().map(|v| v.to_string()).collect(),
            shape: shape.name(),
            witness: match shape {
                ShapeClass::NotSerial(w) => Some(w.to_string()),
                _ => None,
            },
        })
        .collect();
    let serial = shapes.iter().all(|(_, s)| s.is_serial());
    let hom_computable = serial
        && is_hom_computable_serial(q, coalgebra_finite_dimensional)
            .map(|(b, _)| b)
            .unwrap_or(false);
    let representation_directed = serial
        && is_representation_directed_serial(q)
            .map(|(b, _)| b)
            .unwrap_or(false);
    let eg = match eg_classify(q) {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    };
    Ok(ClassificationReport {
        components,
        right_serial: is_right_serial(q),
        left_serial: is_left_serial(q),
        hom_computable,
        representation_directed,
        eg,
    })
}
