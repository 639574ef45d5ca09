//! The four bundled dual-containing constructions and the record
//! improvements they are expected to yield against the bundled snapshot of
//! best-known quantum code parameters.

use qc4::quantum::Window;

/// One bundled construction: generator strings in coefficient notation,
/// the published classical parameters, and the derivation window used when
/// closing over the propagation rules.
pub struct CatalogEntry {
    /// 1-based row number, also used in CLI arguments.
    pub index: usize,
    pub n: usize,
    pub g1: &'static str,
    pub g2: &'static str,
    pub nu: &'static str,
    /// Published classical parameters (length, dimension, distance).
    pub claimed: (usize, usize, u32),
    /// Published quantum parameters of the base code.
    pub claimed_quantum: (u32, u32, u32),
    pub window: Window,
}

pub const CATALOG: [CatalogEntry; 4] = [
    CatalogEntry {
        index: 1,
        n: 21,
        g1: "1101",
        g2: "3^{2}1^{2}(31)^{2}12(21)^{2}",
        nu: "1020231213^{2}23^{2}0332^{3}",
        claimed: (42, 26, 9),
        claimed_quantum: (42, 10, 9),
        window: Window {
            min_n: Some(41),
            max_n: Some(45),
            min_k: Some(9),
            max_k: None,
        },
    },
    CatalogEntry {
        index: 2,
        n: 35,
        g1: "13(23)^{2}0(23)^{2}21",
        g2: "1331",
        nu: "1302^{2}03230^{2}20(23)^{2}121^{2}0213^{2}231(12)^{2}1",
        claimed: (70, 55, 7),
        claimed_quantum: (70, 40, 7),
        window: Window {
            min_n: Some(69),
            max_n: Some(71),
            min_k: Some(39),
            max_k: None,
        },
    },
    CatalogEntry {
        index: 3,
        n: 39,
        g1: "31",
        g2: "13102301(03)^{2}01^{2}02^{2}1",
        nu: "22010312(03)^{2}2^{4}303^{2}213^{3}03^{2}123^{2}1020323",
        claimed: (78, 59, 9),
        claimed_quantum: (78, 40, 9),
        window: Window {
            min_n: Some(77),
            max_n: Some(80),
            min_k: Some(39),
            max_k: None,
        },
    },
    CatalogEntry {
        index: 4,
        n: 37,
        g1: "131^{2}3^{2}2(13)^{2}123^{2}1^{2}31",
        g2: "1^{2}",
        nu: "101^{3}2(31)^{2}2^{3}3^{2}12^{2}3203^{2}1^{3}3123(12)^{2}201",
        claimed: (74, 55, 9),
        claimed_quantum: (74, 36, 9),
        window: Window {
            min_n: Some(73),
            max_n: Some(77),
            min_k: Some(33),
            max_k: None,
        },
    },
];

/// The 30 (n, k, d) triples the four closures must flag as improvements
/// over the bundled records snapshot.
pub const EXPECTED_IMPROVEMENTS: [(u32, u32, u32); 30] = [
    (42, 9, 9),
    (42, 10, 9),
    (43, 10, 9),
    (44, 10, 9),
    (45, 10, 9),
    (70, 39, 7),
    (70, 40, 7),
    (71, 40, 7),
    (74, 33, 9),
    (74, 34, 9),
    (74, 35, 9),
    (74, 36, 9),
    (75, 33, 9),
    (75, 34, 9),
    (75, 35, 9),
    (75, 36, 9),
    (76, 33, 9),
    (76, 34, 9),
    (76, 35, 9),
    (76, 36, 9),
    (77, 34, 9),
    (77, 35, 9),
    (77, 36, 9),
    (77, 41, 8),
    (78, 39, 9),
    (78, 40, 9),
    (79, 39, 9),
    (79, 40, 9),
    (80, 39, 9),
    (80, 40, 9),
];

/// The bundled records snapshot (same content as `data/grassl_snapshot.csv`).
pub const BASELINE_RECORDS_CSV: &str = include_str!("../../../data/grassl_snapshot.csv");

pub fn entry(index: usize) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.index == index)
}
