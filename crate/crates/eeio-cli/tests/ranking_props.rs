//! Ranking invariants on random intensity vectors, duplicates included.

use eeio::{Sector, SectorCatalog};
use eeio_cli::ranking::{rank_all, rank_sectors};
use proptest::prelude::*;

fn catalog(n: usize, energy_mask: &[bool]) -> SectorCatalog {
    SectorCatalog::new(
        (0..n)
            .map(|i| Sector {
                index: i,
                code: format!("S{i:03}"),
                name: format!("Sector {i}"),
                is_energy: energy_mask[i],
            })
            .collect(),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn ranking_is_a_valid_permutation_with_tie_breaks(
        // Coarse values force ties; at least one energy and one non-energy.
        raw in prop::collection::vec(0u8..5, 3..30),
        energy_count in 1usize..3,
    ) {
        let n = raw.len();
        prop_assume!(energy_count < n);
        let values: Vec<f64> = raw.iter().map(|&v| v as f64).collect();
        let mask: Vec<bool> = (0..n).map(|i| i < energy_count).collect();
        let cat = catalog(n, &mask);

        let ranked = rank_all(&values, &cat, true);
        let m = n - energy_count;
        prop_assert_eq!(ranked.len(), m);

        // Ranks are exactly 1..m in order.
        for (pos, entry) in ranked.iter().enumerate() {
            prop_assert_eq!(entry.rank, pos + 1);
        }
        // Each non-energy sector appears exactly once.
        let mut seen: Vec<usize> = ranked.iter().map(|r| r.index).collect();
        seen.sort_unstable();
        let expected: Vec<usize> = (energy_count..n).collect();
        prop_assert_eq!(seen, expected);
        // Descending values; ties by ascending index.
        for pair in ranked.windows(2) {
            prop_assert!(
                pair[0].value > pair[1].value
                    || (pair[0].value == pair[1].value && pair[0].index < pair[1].index)
            );
        }
        // Truncation keeps the head of the full ranking.
        let top = rank_sectors(&values, &cat, 3, true);
        prop_assert_eq!(top.as_slice(), &ranked[..3.min(m)]);
    }
}
