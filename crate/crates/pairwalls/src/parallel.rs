use pairwalls_core::walls::{enumerate_group, sort_walls};
use pairwalls_core::{NumClass, Result, WallRecord};
use rayon::prelude::*;

/// Same result as `pairwalls_core::walls::enumerate_walls`, one group per task.
pub fn enumerate_walls(v: &NumClass, k: i64, max_group: i64) -> Result<Vec<WallRecord>> {
    let groups = (0..=max_group)
        .into_par_iter()
        .map(|s| enumerate_group(v, k, s))
        .collect::<Result<Vec<_>>>()?;
    let mut walls: Vec<WallRecord> = groups.into_iter().flatten().collect();
    sort_walls(&mut walls);
    Ok(walls)
}
