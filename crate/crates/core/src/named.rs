//! Standard small complexes used as fixtures and in the shipped corpus.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::face::Face;

/// Facets written as letter strings; vertices are numbered alphabetically.
fn from_words(words: &[&str]) -> Complex {
    let mut letters: Vec<char> = words.iter().flat_map(|w| w.chars()).collect();
    letters.sort_unstable();
    letters.dedup();
    let labels = letters.iter().map(|c| String::from(*c)).collect();
    let faces = words
        .iter()
        .map(|w| Face::from_vertices(w.chars().map(|c| letters.binary_search(&c).expect("listed"))));
    Complex::new(labels, faces).expect("fixture is well formed")
}

/// Facets written as digit strings indexing into `labels`.
fn from_digits(words: &[&str], labels: &[&str], base: u8) -> Complex {
    let faces = words
        .iter()
        .map(|w| Face::from_vertices(w.bytes().map(|b| (b - base) as usize)));
    Complex::new(labels.iter().map(|l| String::from(*l)).collect(), faces).expect("fixture is well formed")
}

/// `Λ_n^d`: every `(d+1)`-subset of `n` vertices.
pub fn lambda(n: usize, d: usize) -> Complex {
    Complex::complete_pure(n, d)
}

/// The 6-vertex real projective plane.
pub fn rp2() -> Complex {
    from_digits(
        &["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"],
        &["1", "2", "3", "4", "5", "6"],
        b'1',
    )
}

/// Two hollow tetrahedra sharing the edge `cd`.
pub fn double_tetrahedron() -> Complex {
    from_words(&["abc", "abd", "acd", "bcd", "cde", "cdf", "cef", "def"])
}

/// Boundary of the triangular bipyramid with poles `d`, `e`.
pub fn bipyramid() -> Complex {
    from_words(&["abd", "acd", "bcd", "abe", "ace", "bce"])
}

/// The bipyramid together with its equatorial triangle `abc`.
pub fn bipyramid_with_chord() -> Complex {
    from_words(&["abd", "acd", "bcd", "abe", "ace", "bce", "abc"])
}

/// Boundary of the octahedron with poles `a`, `b` and equator `c d e f`.
pub fn octahedron() -> Complex {
    from_words(&["acd", "ade", "aef", "acf", "bcd", "bde", "bef", "bcf"])
}

/// The octahedron with the chords `ace`, `cde`, `bce`, `cef`, which cut it
/// into four hollow tetrahedra.
pub fn octahedron_with_chords() -> Complex {
    from_words(&[
        "acd", "ade", "aef", "acf", "bcd", "bde", "bef", "bcf", "ace", "cde", "bce", "cef",
    ])
}

/// The 2-complex `⟨abc, abd, acd, bcd, cde⟩`.
pub fn tetra_with_fin() -> Complex {
    from_words(&["abc", "abd", "acd", "bcd", "cde"])
}

/// The pure 3-complex on `x0 .. x6` obtained from `Λ_7^3` by removing
/// `x0x1x5x6, x0x2x5x6, x0x3x5x6, x0x4x5x6, x1x2x3x4`.
pub fn example7() -> Complex {
    let removed = ["0156", "0256", "0356", "0456", "1234"];
    let words: Vec<String> = Face::full(7)
        .subsets_of_size(4)
        .map(|f| f.vertices().map(|v| char::from(b'0' + v as u8)).collect::<String>())
        .filter(|w| !removed.contains(&w.as_str()))
        .collect();
    let refs: Vec<&str> = words.iter().map(String::as_str).collect();
    from_digits(&refs, &["x0", "x1", "x2", "x3", "x4", "x5", "x6"], b'0')
}

fn graph(edges: &[(usize, usize)], n: usize) -> Complex {
    let labels = (1..=n).map(|i| format!("{i}")).collect();
    Complex::new(labels, edges.iter().map(|&(a, b)| Face::from_vertices([a, b]))).expect("fixture is well formed")
}

/// The graph cycle `1 - 2 - .. - n - 1`.
pub fn cycle_graph(n: usize) -> Complex {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(&edges, n)
}

/// The path `1 - 2 - .. - n`.
pub fn path_graph(n: usize) -> Complex {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    graph(&edges, n)
}

/// Every named fixture with its corpus file stem.
pub fn all() -> Vec<(&'static str, Complex)> {
    alloc::vec![
        ("lambda4_2", lambda(4, 2)),
        ("rp2", rp2()),
        ("double_tetrahedron", double_tetrahedron()),
        ("bipyramid", bipyramid()),
        ("bipyramid_chorded", bipyramid_with_chord()),
        ("octahedron", octahedron()),
        ("octahedron_chorded", octahedron_with_chords()),
        ("tetra_with_fin", tetra_with_fin()),
        ("example7", example7()),
        ("c4", cycle_graph(4)),
        ("c5", cycle_graph(5)),
        ("p4", path_graph(4)),
    ]
}
