//! Block decomposition (biconnected components) of a connected graph,
//! via the classic lowpoint DFS. Blocks come out as vertex bitsets; leaf
//! blocks of the block-cut tree are the endblocks.

use crate::error::Error;
use crate::graph::{iter_bits, Graph};

/// Blocks and cutvertices of a connected graph.
///
/// Every edge lies in exactly one block; two blocks share at most one
/// vertex, which is then a cutvertex. `incident_cutvertices[i]` is the set
/// of cutvertices lying in `blocks[i]`, which is exactly the block-to-cut
/// incidence of the block-cut tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<u64>,
    pub cutvertices: u64,
    pub incident_cutvertices: Vec<u64>,
}

impl BlockDecomposition {
    /// True iff block `i` is a leaf of the block-cut tree.
    pub fn is_endblock(&self, i: usize) -> bool {
        self.incident_cutvertices[i].count_ones() <= 1
    }

    pub fn endblocks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.blocks.len())
            .filter(|&i| self.is_endblock(i))
            .map(|i| self.blocks[i])
    }
}

/// Decomposes a connected graph into blocks. A single vertex is its own
/// (trivial) block. Disconnected input is a contract violation.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, Error> {
    if !g.is_connected() {
        return Err(Error::Contract(
            "block decomposition requires a connected graph".into(),
        ));
    }
    if g.n() == 0 {
        return Ok(BlockDecomposition {
            blocks: vec![],
            cutvertices: 0,
            incident_cutvertices: vec![],
        });
    }
    if g.n() == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![1],
            cutvertices: 0,
            incident_cutvertices: vec![0],
        });
    }

    let mut state = Dfs {
        g,
        disc: vec![usize::MAX; g.n()],
        low: vec![0; g.n()],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cutvertices: 0,
    };
    state.visit(0, usize::MAX);

    let cutvertices = state.cutvertices;
    let incident = state.blocks.iter().map(|b| b & cutvertices).collect();
    Ok(BlockDecomposition {
        blocks: state.blocks,
        cutvertices,
        incident_cutvertices: incident,
    })
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
    cutvertices: u64,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        self.timer += 1;
        let mut children = 0;

        for v in iter_bits(self.g.neighbors(u)) {
            if self.disc[v] == usize::MAX {
                children += 1;
                self.edge_stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    // u separates v's subtree: pop one block.
                    if parent != usize::MAX || children > 1 {
                        self.cutvertices |= 1 << u;
                    }
                    let mut block = 0u64;
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        self.edge_stack.pop();
                        block |= 1 << a | 1 << b;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_connected_graph_is_one_block() {
        let d = block_decomposition(&Graph::cycle(5)).unwrap();
        assert_eq!(d.blocks, vec![0b11111]);
        assert_eq!(d.cutvertices, 0);
        assert!(d.is_endblock(0));
    }

    #[test]
    fn path_splits_into_edges() {
        let d = block_decomposition(&Graph::path(3)).unwrap();
        let mut blocks = d.blocks.clone();
        blocks.sort_unstable();
        assert_eq!(blocks, vec![0b011, 0b110]);
        assert_eq!(d.cutvertices, 0b010);
        assert!(d.is_endblock(0) && d.is_endblock(1));
    }

    #[test]
    fn bowtie_is_two_triangles_glued_at_a_cutvertex() {
        let d = block_decomposition(&Graph::bowtie()).unwrap();
        let mut blocks = d.blocks.clone();
        blocks.sort_unstable();
        assert_eq!(blocks, vec![0b00111, 0b11100]);
        assert_eq!(d.cutvertices, 0b00100);
    }

    #[test]
    fn singleton_and_disconnected() {
        let d = block_decomposition(&Graph::empty(1)).unwrap();
        assert_eq!(d.blocks, vec![1]);
        assert!(matches!(
            block_decomposition(&Graph::empty(2)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn edges_partition_into_blocks() {
        // Wheel plus a pendant path hanging off the hub.
        let mut edges = Graph::wheel(5).edges();
        edges.push((5, 6));
        edges.push((6, 7));
        let g = Graph::from_edges(8, &edges);
        let d = block_decomposition(&g).unwrap();
        let total: usize = d.blocks.iter().map(|&b| g.edges_within(b)).sum();
        assert_eq!(total, g.edge_count());
        assert_eq!(d.cutvertices, 0b01100000);
        assert_eq!(d.endblocks().count(), 2);
    }
}
