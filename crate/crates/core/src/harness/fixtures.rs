//! The figure graphs, with fixed vertex labelings.
//!
//! `fig1` (five vertices, labeled a..e in reading order):
//!
//! ```text
//!  c=2     d=3 --- e=4
//!   |       |    /
//!  a=0 --- b=1 -'
//! ```
//!
//! `fig3` (bottom path 0-1-2-3-4; named vertices in brackets):
//!
//! ```text
//!  5[v1]     6[v2]     7 --- 8[v3]
//!   |  \      |  \      |   /
//!   0 -- 1 -- 2 -- 3 -- 4 -'
//!      [w1]      [w2]  [u]
//! ```
//!
//! `fig4` (left graph G; top row t1..t5 = 3..7, bottom row 0..2, with
//! `v = 0` and `u = 2`):
//!
//! ```text
//!  t1=3 - t2=4   t3=5   t4=6 - t5=7
//!     \    |      |      |    /
//!      '- v=0 --- 1 --- u=2 -'
//! ```

use crate::graph::Graph;

pub const FIG4_V: usize = 0;
pub const FIG4_U: usize = 2;
pub const FIG4_T1: usize = 3;
pub const FIG4_T3: usize = 5;
pub const FIG4_T5: usize = 7;

/// Named vertices of `fig3`: `v1, v2, v3, w1, w2, u`.
pub const FIG3_NAMED: [usize; 6] = [5, 6, 8, 1, 3, 4];

pub fn fig1() -> Graph {
    Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]).expect("fixture")
}

/// The square of `fig1`, written out edge by edge.
pub fn fig1_square() -> Graph {
    Graph::from_edge_list(5, [(0, 1), (3, 4), (0, 3), (0, 2), (2, 1), (1, 3), (1, 4), (0, 4)])
        .expect("fixture")
}

pub fn fig3() -> Graph {
    Graph::from_edge_list(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5), (2, 6), (3, 6), (4, 7), (7, 8), (4, 8)],
    )
    .expect("fixture")
}

pub fn fig4() -> Graph {
    Graph::from_edge_list(8, [(0, 1), (1, 2), (0, 4), (1, 5), (2, 6), (3, 4), (6, 7), (0, 3), (2, 7)])
        .expect("fixture")
}

/// The graph `H` drawn beside `fig4`, in the labeling of `fig4`. The square
/// of `fig4` is `H` plus the edge `vu`.
pub fn fig4_h() -> Graph {
    Graph::from_edge_list(
        8,
        [
            (0, 1),
            (1, 2),
            (0, 5),
            (4, 1),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 4),
            (6, 7),
            (3, 0),
            (3, 1),
            (1, 7),
            (1, 6),
            (5, 2),
            (2, 7),
        ],
    )
    .expect("fixture")
}

/// The three figure graphs under their names.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![("fig1", fig1()), ("fig3", fig3()), ("fig4", fig4())]
}

/// The figures plus small named graphs: `C4`, `C5`,
/// `C6`, `P4` and the stars `K_{1,2}`, `K_{1,3}`.
pub fn named_examples() -> Vec<(&'static str, Graph)> {
    let mut all = fixtures();
    all.extend([
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("P4", Graph::path(4)),
        ("K1,2", Graph::star(2)),
        ("K1,3", Graph::star(3)),
    ]);
    all
}
