//! Intensity rankings: per-year sector orderings and the multi-year table.

use eeio::SectorCatalog;

#[derive(Debug, Clone, PartialEq)]
pub struct RankedSector {
    pub index: usize,
    pub code: String,
    pub name: String,
    pub value: f64,
    pub rank: usize,
}

/// Sorts sectors descending by intensity; ties break toward the lower sector
/// index. Energy sectors are dropped first when `exclude_energy` is set, and
/// the result is truncated to `top_n`.
pub fn rank_sectors(
    values: &[f64],
    catalog: &SectorCatalog,
    top_n: usize,
    exclude_energy: bool,
) -> Vec<RankedSector> {
    let mut ranked = rank_all(values, catalog, exclude_energy);
    ranked.truncate(top_n);
    ranked
}

/// Full ranking (no truncation) over the selected sector set.
pub fn rank_all(
    values: &[f64],
    catalog: &SectorCatalog,
    exclude_energy: bool,
) -> Vec<RankedSector> {
    assert_eq!(values.len(), catalog.len(), "values do not match catalog");
    let mut picked: Vec<&eeio::Sector> = catalog
        .iter()
        .filter(|s| !(exclude_energy && s.is_energy))
        .collect();
    picked.sort_by(|a, b| {
        values[b.index]
            .total_cmp(&values[a.index])
            .then(a.index.cmp(&b.index))
    });
    picked
        .into_iter()
        .enumerate()
        .map(|(pos, s)| RankedSector {
            index: s.index,
            code: s.code.clone(),
            name: s.name.clone(),
            value: values[s.index],
            rank: pos + 1,
        })
        .collect()
}

/// One sector's line in the multi-year table: (value, rank) per year.
#[derive(Debug, Clone)]
pub struct RankingRow {
    pub index: usize,
    pub code: String,
    pub name: String,
    pub cells: Vec<(f64, usize)>,
}

/// Multi-year ranking of non-energy sectors. Rows are the `top_n` sectors by
/// the latest year's intensity, in that year's rank order; each cell carries
/// the sector's value and rank within the full non-energy set of that year.
#[derive(Debug, Clone)]
pub struct RankingTable {
    pub years: Vec<i32>,
    pub rows: Vec<RankingRow>,
}

pub fn build_ranking_table(
    per_year: &[(i32, Vec<f64>)],
    catalog: &SectorCatalog,
    top_n: usize,
) -> RankingTable {
    assert!(
        !per_year.is_empty(),
        "ranking table needs at least one year"
    );
    let years: Vec<i32> = per_year.iter().map(|(y, _)| *y).collect();

    // rank_by_year[y][sector index] = (value, rank) over the non-energy set.
    let rank_maps: Vec<Vec<Option<(f64, usize)>>> = per_year
        .iter()
        .map(|(_, values)| {
            let mut map = vec![None; catalog.len()];
            for entry in rank_all(values, catalog, true) {
                map[entry.index] = Some((entry.value, entry.rank));
            }
            map
        })
        .collect();

    let latest = rank_all(&per_year.last().unwrap().1, catalog, true);
    let rows = latest
        .into_iter()
        .take(top_n)
        .map(|sector| RankingRow {
            cells: rank_maps
                .iter()
                .map(|map| map[sector.index].expect("sector ranked in every year"))
                .collect(),
            index: sector.index,
            code: sector.code,
            name: sector.name,
        })
        .collect();

    RankingTable { years, rows }
}
