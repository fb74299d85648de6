//! Chord diagrams as double-occurrence words, their intersection graphs,
//! and face tracing on the one-vertex ribbon graph spanned by a chord
//! subset. This is the oracle route to the genus polynomial: no linear
//! algebra, only permutation cycles.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{bits, SimpleGraph};
use crate::par::subset_counts;
use crate::poly::UniPoly;
use crate::{Error, Result, MAX_VERTICES};

/// Subset of the chords 0..m, one bit per chord.
pub type ChordSubset = u64;

/// Default cap for the 2^m subset sum in [`ChordDiagram::pdgp_via_ribbon`].
pub const DEFAULT_RIBBON_CAP: usize = 24;

/// Default cap for enumerating all (2m-1)!! diagrams.
pub const DEFAULT_DIAGRAM_ENUMERATION_CAP: usize = 7;

/// Double-occurrence word of 2m positions on a circle; chords are labeled
/// 0..m in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    word: Vec<usize>,
    ends: Vec<(usize, usize)>,
}

impl ChordDiagram {
    /// Builds a diagram from any sequence in which every label occurs
    /// exactly twice; labels are replaced by 0..m in first-occurrence order.
    pub fn from_word<T: Eq + std::fmt::Display>(seq: &[T]) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut reps: Vec<&T> = Vec::new();
        let mut word = Vec::with_capacity(seq.len());
        for t in seq {
            let id = match reps.iter().position(|&r| r == t) {
                Some(i) => i,
                None => {
                    reps.push(t);
                    reps.len() - 1
                }
            };
            word.push(id);
        }
        if reps.len() > MAX_VERTICES {
            return Err(Error::SizeCapExceeded { size: reps.len(), cap: MAX_VERTICES });
        }
        for (id, rep) in reps.iter().enumerate() {
            let count = word.iter().filter(|&&w| w == id).count();
            if count != 2 {
                return Err(Error::BadOccurrenceCount { label: rep.to_string(), count });
            }
        }
        Ok(Self::from_canonical(word))
    }

    /// Word already canonical: labels 0..m by first occurrence, each twice.
    fn from_canonical(word: Vec<usize>) -> Self {
        let m = word.len() / 2;
        let mut ends = vec![(usize::MAX, usize::MAX); m];
        for (pos, &c) in word.iter().enumerate() {
            if ends[c].0 == usize::MAX {
                ends[c].0 = pos;
            } else {
                debug_assert_eq!(ends[c].1, usize::MAX);
                ends[c].1 = pos;
            }
        }
        debug_assert!(ends.iter().all(|&(p, q)| p < q));
        Self { word, ends }
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The two circle positions of chord c, ascending.
    pub fn endpoints(&self, c: usize) -> (usize, usize) {
        self.ends[c]
    }

    pub fn full_mask(&self) -> ChordSubset {
        if self.m() == 0 {
            0
        } else {
            u64::MAX >> (64 - self.m())
        }
    }

    /// One vertex per chord, an edge where two chords interleave on the
    /// circle.
    pub fn intersection_graph(&self) -> SimpleGraph {
        let m = self.m();
        let mut g = SimpleGraph::new(m).expect("chord count is capped at construction");
        for c in 0..m {
            let (a1, a2) = self.ends[c];
            for d in c + 1..m {
                let (b1, b2) = self.ends[d];
                let inside = u8::from(a1 < b1 && b1 < a2) + u8::from(a1 < b2 && b2 < a2);
                if inside == 1 {
                    g.add_edge(c, d).expect("valid chord pair");
                }
            }
        }
        g
    }

    /// Number of boundary components of the spanning surface built from the
    /// vertex disc and the chords in `a`.
    ///
    /// The word is restricted to the 2|a| endpoints of the kept chords and
    /// those positions renumbered 0..2|a| in circle order. With t the
    /// involution swapping the endpoints of each chord and r the +1
    /// rotation, the boundary components are the cycles of r after t.
    pub fn boundary_components(&self, a: ChordSubset) -> usize {
        let a = a & self.full_mask();
        if a == 0 {
            return 1;
        }
        let mut newpos = vec![usize::MAX; self.word.len()];
        let mut k = 0;
        for (pos, &c) in self.word.iter().enumerate() {
            if a >> c & 1 == 1 {
                newpos[pos] = k;
                k += 1;
            }
        }
        let mut tau = vec![0usize; k];
        for c in bits(a) {
            let (p, q) = self.ends[c];
            tau[newpos[p]] = newpos[q];
            tau[newpos[q]] = newpos[p];
        }
        let mut seen = vec![false; k];
        let mut cycles = 0;
        for start in 0..k {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = (tau[i] + 1) % k;
            }
        }
        cycles
    }

    /// Euler genus of the spanning surface of `a`: one disc, |a| bands and
    /// the traced boundary count.
    pub fn euler_genus_spanning(&self, a: ChordSubset) -> usize {
        let a = a & self.full_mask();
        let bands = a.count_ones() as usize;
        let genus = 1 + bands - self.boundary_components(a);
        debug_assert_eq!(genus % 2, 0);
        genus
    }

    /// Euler genus of the partial dual over `a`, via the spanning-surface
    /// decomposition: the genera of the surfaces of `a` and its complement
    /// add.
    pub fn partial_dual_genus(&self, a: ChordSubset) -> usize {
        let a = a & self.full_mask();
        self.euler_genus_spanning(a) + self.euler_genus_spanning(self.full_mask() ^ a)
    }

    /// Genus polynomial over all 2^m partial duals, traced on the diagram.
    pub fn pdgp_via_ribbon(&self) -> Result<UniPoly> {
        self.pdgp_via_ribbon_capped(DEFAULT_RIBBON_CAP)
    }

    pub fn pdgp_via_ribbon_capped(&self, cap: usize) -> Result<UniPoly> {
        let m = self.m();
        if m > cap {
            return Err(Error::SizeCapExceeded { size: m, cap });
        }
        let counts = subset_counts(m, 2 * m + 1, |mask| Some(self.partial_dual_genus(mask)));
        let mut poly = UniPoly::zero();
        for (exp, &c) in counts.iter().enumerate() {
            poly.add_term(exp as u32, c as i128)?;
        }
        Ok(poly)
    }
}

/// Parses a chord word: either whitespace/comma separated tokens or, when
/// neither separator occurs, one token per character.
pub fn parse_word(text: &str) -> Result<ChordDiagram> {
    let tokens: Vec<String> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect()
    } else {
        text.chars().map(|c| c.to_string()).collect()
    };
    ChordDiagram::from_word(&tokens)
}

fn odd_double_factorial(m: usize) -> Result<u64> {
    (1..=m as u64).try_fold(1u64, |acc, i| acc.checked_mul(2 * i - 1)).ok_or(Error::Overflow)
}

/// All (2m-1)!! perfect matchings of 2m circle positions, one diagram each,
/// in a fixed mixed-radix order.
pub fn enumerate_diagrams(m: usize) -> Result<impl Iterator<Item = ChordDiagram>> {
    enumerate_diagrams_capped(m, DEFAULT_DIAGRAM_ENUMERATION_CAP)
}

pub fn enumerate_diagrams_capped(
    m: usize,
    cap: usize,
) -> Result<impl Iterator<Item = ChordDiagram>> {
    if m > cap {
        return Err(Error::SizeCapExceeded { size: m, cap });
    }
    let count = odd_double_factorial(m)?;
    Ok((0..count).map(move |idx| diagram_from_index(m, idx)))
}

/// Decodes a mixed-radix index: chord c starts at the lowest free position
/// and pairs with the (idx mod radix)-th remaining free position.
fn diagram_from_index(m: usize, mut idx: u64) -> ChordDiagram {
    let mut free: Vec<usize> = (0..2 * m).collect();
    let mut word = vec![0usize; 2 * m];
    for chord in 0..m {
        let first = free.remove(0);
        let radix = free.len() as u64;
        let partner = free.remove((idx % radix) as usize);
        idx /= radix;
        word[first] = chord;
        word[partner] = chord;
    }
    ChordDiagram::from_canonical(word)
}

/// Uniform random perfect matching from a seeded ChaCha8 stream.
pub fn random_diagram(m: usize, seed: u64) -> Result<ChordDiagram> {
    if m > MAX_VERTICES {
        return Err(Error::SizeCapExceeded { size: m, cap: MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<usize> = (0..2 * m).collect();
    pos.shuffle(&mut rng);
    let mut raw = vec![0usize; 2 * m];
    for c in 0..m {
        raw[pos[2 * c]] = c;
        raw[pos[2 * c + 1]] = c;
    }
    if m == 0 {
        return Ok(ChordDiagram::from_canonical(Vec::new()));
    }
    ChordDiagram::from_word(&raw)
}
