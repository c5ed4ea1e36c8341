//! Rooted arborescence of spiral arcs: the common output type of the exact
//! DP, the greedy sweeps, and the constructions in the oracle module.

use crate::angle::AngleConfig;
use crate::polar::PolarPoint;
use crate::spiral::SpiralArc;
use serde::{Deserialize, Serialize};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeKind {
    Root,
    Terminal,
    Steiner,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeNode {
    pub id: NodeId,
    pub point: PolarPoint,
    pub kind: NodeKind,
    /// Next node towards the root; None only for the root itself.
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    /// Terminal label from the input instance, when applicable.
    pub label: Option<String>,
}

/// Geometry of the connection from a child node to its parent, as a
/// sequence of pieces traversed child -> parent.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Arc {
    pub child: NodeId,
    pub parent: NodeId,
    pub pieces: Vec<SpiralArc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Arborescence {
    pub nodes: Vec<TreeNode>,
    pub arcs: Vec<Arc>,
}

pub const ROOT_ID: NodeId = 0;

impl Arborescence {
    /// A tree containing only the root at the origin.
    pub fn root_only() -> Self {
        Arborescence {
            nodes: vec![TreeNode {
                id: ROOT_ID,
                point: PolarPoint::root(),
                kind: NodeKind::Root,
                parent: None,
                children: Vec::new(),
                label: None,
            }],
            arcs: Vec::new(),
        }
    }

    pub fn add_node(&mut self, point: PolarPoint, kind: NodeKind, label: Option<String>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(TreeNode { id, point, kind, parent: None, children: Vec::new(), label });
        id
    }

    /// Connects `child` under `parent` with explicit arc geometry.
    pub fn connect(&mut self, child: NodeId, parent: NodeId, pieces: Vec<SpiralArc>) {
        debug_assert!(self.nodes[child].parent.is_none(), "node {child} already connected");
        self.nodes[child].parent = Some(parent);
        self.nodes[parent].children.push(child);
        self.arcs.push(Arc { child, parent, pieces });
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[ROOT_ID]
    }

    pub fn terminals(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Terminal)
    }

    pub fn arc_for_child(&self, child: NodeId) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.child == child)
    }

    /// Radial drop of an arc: child radius minus parent radius. For pure
    /// monotone spiral arcs this times sec(alpha) is the arc length.
    pub fn arc_radial_drop(&self, arc: &Arc) -> f64 {
        self.nodes[arc.child].point.radius - self.nodes[arc.parent].point.radius
    }

    /// Whether every arc consists of monotone spiral pieces (a radial stub
    /// closing a root arc counts as part of its winding spiral).
    pub fn is_pure_spiral(&self) -> bool {
        self.arcs.iter().all(|arc| {
            arc.pieces.iter().all(|p| match p {
                SpiralArc::Spiral { .. } => true,
                SpiralArc::Straight { from, to } => {
                    // Radial stubs only: both endpoints on one ray, inner at
                    // the root or nearly so.
                    to.is_root() || (from.angle - to.angle).abs() < 1e-9
                }
            })
        })
    }

    /// Tree length. For pure spiral trees this is the exact telescoping
    /// identity sum(sec(alpha) * radial drop); otherwise the pieces are
    /// measured individually by their closed-form lengths.
    pub fn length(&self, cfg: &AngleConfig) -> f64 {
        if self.is_pure_spiral() {
            self.arcs.iter().map(|a| cfg.sec_alpha() * self.arc_radial_drop(a)).sum()
        } else {
            self.arcs
                .iter()
                .map(|a| a.pieces.iter().map(|p| p.length(cfg)).sum::<f64>())
                .sum()
        }
    }

    /// Length of the tree path from `node` to the root, by radial-drop
    /// accounting per arc (exact for monotone spiral arcs).
    pub fn path_length_to_root(&self, node: NodeId, cfg: &AngleConfig) -> f64 {
        let mut total = 0.0;
        let mut cur = node;
        let mut hops = 0;
        while let Some(parent) = self.nodes[cur].parent {
            let arc = self.arc_for_child(cur).expect("connected node has an arc");
            if arc.pieces.iter().all(|p| matches!(p, SpiralArc::Spiral { .. }))
                || self.is_arc_monotone_spiral(arc)
            {
                total += cfg.sec_alpha() * self.arc_radial_drop(arc);
            } else {
                total += arc.pieces.iter().map(|p| p.length(cfg)).sum::<f64>();
            }
            cur = parent;
            hops += 1;
            assert!(hops <= self.nodes.len(), "parent cycle detected");
        }
        total
    }

    fn is_arc_monotone_spiral(&self, arc: &Arc) -> bool {
        arc.pieces.iter().all(|p| match p {
            SpiralArc::Spiral { .. } => true,
            SpiralArc::Straight { from, to } => {
                to.is_root() || (from.angle - to.angle).abs() < 1e-9
            }
        })
    }

    /// Ids of leaves (nodes without children), in insertion order.
    pub fn leaves(&self) -> Vec<NodeId> {
        self.nodes.iter().filter(|n| n.children.is_empty()).map(|n| n.id).collect()
    }

    /// Checks structural integrity: single root, every non-root connected,
    /// parent links acyclic and consistent with arcs.
    pub fn check_structure(&self) -> Result<(), String> {
        if self.nodes.is_empty() || self.nodes[ROOT_ID].kind != NodeKind::Root {
            return Err("node 0 must be the root".into());
        }
        for n in &self.nodes {
            if n.id != ROOT_ID && n.parent.is_none() {
                return Err(format!("node {} is detached", n.id));
            }
            if n.id == ROOT_ID && n.parent.is_some() {
                return Err("root must not have a parent".into());
            }
        }
        if self.arcs.len() != self.nodes.len().saturating_sub(1) {
            return Err(format!(
                "expected {} arcs, found {}",
                self.nodes.len() - 1,
                self.arcs.len()
            ));
        }
        // Walking to the root must terminate from every node.
        for n in &self.nodes {
            let mut cur = n.id;
            let mut hops = 0;
            while let Some(p) = self.nodes[cur].parent {
                cur = p;
                hops += 1;
                if hops > self.nodes.len() {
                    return Err(format!("cycle reachable from node {}", n.id));
                }
            }
            if cur != ROOT_ID {
                return Err(format!("node {} does not reach the root", n.id));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::canonical_root_arc;
    use std::f64::consts::FRAC_PI_6;

    #[test]
    fn single_arc_tree_length() {
        let cfg = AngleConfig::new(FRAC_PI_6).unwrap();
        let mut tree = Arborescence::root_only();
        let p = PolarPoint::new(1.0, 0.4);
        let t = tree.add_node(p, NodeKind::Terminal, Some("a".into()));
        tree.connect(t, ROOT_ID, canonical_root_arc(&p, &cfg));
        assert!(tree.check_structure().is_ok());
        assert!((tree.length(&cfg) - cfg.sec_alpha()).abs() < 1e-12);
        assert!((tree.path_length_to_root(t, &cfg) - cfg.sec_alpha()).abs() < 1e-12);
    }

    #[test]
    fn empty_tree() {
        let cfg = AngleConfig::default_alpha();
        let tree = Arborescence::root_only();
        assert_eq!(tree.length(&cfg), 0.0);
        assert!(tree.check_structure().is_ok());
    }
}
