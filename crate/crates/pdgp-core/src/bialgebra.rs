//! Set partitions of vertex subsets and the evaluation of multiplicative
//! invariants on the primitive projection of the graph bialgebra, where
//! multiplication is disjoint union and comultiplication splits the vertex
//! set over complementary induced subgraphs.

use crate::graph::{bits, SimpleGraph, VertexSubset};
use crate::invariants::{
    self, pdgp_capped, pdgp_refined_capped, rank_invariant, skew_char_capped,
    skew_char_refined_capped, PolyValue,
};
use crate::poly::{BiPoly, UniPoly};
use crate::{Error, Result};

/// Default cap on |S| for [`set_partitions`]; the stream has Bell(|S|)
/// entries.
pub const DEFAULT_PARTITION_CAP: usize = 12;

/// Default cap for [`eval_on_projection`].
pub const DEFAULT_PROJECTION_CAP: usize = 10;

/// Partition of a vertex subset into nonempty blocks, ordered by smallest
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<VertexSubset>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[VertexSubset] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// All partitions of the vertices in `s`, exactly once each, in restricted
/// growth order: the single-block partition first, all singletons last.
pub fn set_partitions(s: VertexSubset) -> Result<SetPartitions> {
    set_partitions_capped(s, DEFAULT_PARTITION_CAP)
}

pub fn set_partitions_capped(s: VertexSubset, cap: usize) -> Result<SetPartitions> {
    let elems: Vec<usize> = bits(s).collect();
    if elems.len() > cap {
        return Err(Error::SizeCapExceeded { size: elems.len(), cap });
    }
    let len = elems.len();
    Ok(SetPartitions { elems, rgs: vec![0; len], done: false })
}

/// Lazy stream over restricted growth strings: position i carries the
/// block index of the i-th smallest element, and a block index may exceed
/// its predecessors' maximum by at most one.
pub struct SetPartitions {
    elems: Vec<usize>,
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let num_blocks = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![0u64; num_blocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b] |= 1 << self.elems[i];
        }
        let out = SetPartition { blocks };

        // advance: rightmost position that may still grow, suffix reset
        let mut i = self.rgs.len();
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let prefix_max = *self.rgs[..i].iter().max().expect("nonempty prefix");
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for slot in &mut self.rgs[i + 1..] {
                    *slot = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Invariants that turn disjoint union into polynomial multiplication, so
/// they can be pushed through the projection blockwise.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MultiplicativeInvariant {
    Pdgp,
    PdgpRefined,
    SkewChar,
    SkewCharRefined,
    Rank,
}

impl MultiplicativeInvariant {
    fn eval(self, g: &SimpleGraph, cap: usize) -> Result<PolyValue> {
        Ok(match self {
            Self::Pdgp => PolyValue::Uni(pdgp_capped(g, cap)?),
            Self::PdgpRefined => PolyValue::Bi(pdgp_refined_capped(g, cap)?),
            Self::SkewChar => PolyValue::Uni(skew_char_capped(g, cap)?),
            Self::SkewCharRefined => PolyValue::Bi(skew_char_refined_capped(g, cap)?),
            Self::Rank => PolyValue::Uni(rank_invariant(g)),
        })
    }

    fn zero(self) -> PolyValue {
        match self {
            Self::Pdgp | Self::SkewChar | Self::Rank => PolyValue::Uni(UniPoly::zero()),
            Self::PdgpRefined | Self::SkewCharRefined => PolyValue::Bi(BiPoly::zero()),
        }
    }
}

/// Evaluates f on the primitive projection of G: the signed sum over set
/// partitions {A_1..A_k} of the vertex set of (-1)^(k-1) (k-1)! times the
/// product of f on the induced block subgraphs. Multiplicativity of f is
/// what lets the projection's formal products of graphs collapse to
/// products of polynomials.
pub fn eval_on_projection(f: MultiplicativeInvariant, g: &SimpleGraph) -> Result<PolyValue> {
    eval_on_projection_capped(f, g, DEFAULT_PROJECTION_CAP)
}

pub fn eval_on_projection_capped(
    f: MultiplicativeInvariant,
    g: &SimpleGraph,
    cap: usize,
) -> Result<PolyValue> {
    let n = g.n();
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    let full = g.full_mask();
    // f restricted to a block depends only on the block mask
    let mut table: Vec<PolyValue> = Vec::with_capacity(1 << n);
    for mask in 0..=full {
        table.push(f.eval(&g.induced(mask), cap)?);
    }

    let mut acc = f.zero();
    for partition in set_partitions_capped(full, cap)? {
        let k = partition.num_blocks();
        if k == 0 {
            // the empty graph only has the empty partition, and the
            // projection kills the unit
            continue;
        }
        let mut coeff = if k % 2 == 1 { 1i128 } else { -1 };
        for i in 1..k as i128 {
            coeff = coeff.checked_mul(i).ok_or(Error::Overflow)?;
        }
        let mut product = table[partition.blocks()[0] as usize].clone();
        for &block in &partition.blocks()[1..] {
            product = product.mul(&table[block as usize])?;
        }
        acc = acc.add(&product.scale(coeff)?)?;
    }
    Ok(acc)
}

/// The 2^n complementary vertex-subset pairs (A, A^c) in ascending mask
/// order: the terms of the comultiplication of G.
pub fn coproduct_table(
    g: &SimpleGraph,
) -> Result<impl Iterator<Item = (VertexSubset, VertexSubset)>> {
    let n = g.n();
    if n > invariants::DEFAULT_ENUMERATION_CAP {
        return Err(Error::SizeCapExceeded { size: n, cap: invariants::DEFAULT_ENUMERATION_CAP });
    }
    let full = g.full_mask();
    Ok((0..=full).map(move |mask| (mask, full ^ mask)))
}
