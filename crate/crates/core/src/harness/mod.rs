//! Seeded instance generation, verification reports and the property suites
//! behind the `jacobi-lt` command line.

pub mod checks;
pub mod model;
pub mod report;
pub mod rng;
pub mod sharpness;
pub mod verify;

use std::path::Path;
use std::thread;

use crate::{Perturbation, Result};

/// A perturbation with the identifier used in reports.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub id: String,
    pub perturbation: Perturbation,
}

impl Instance {
    pub fn new(id: impl Into<String>, perturbation: Perturbation) -> Self {
        Instance {
            id: id.into(),
            perturbation,
        }
    }

    /// Reads an instance file; the id is the file name.
    pub fn from_file(path: &Path) -> Result<Self> {
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Ok(Instance::new(id, Perturbation::read_file(path)?))
    }
}

/// Instances `0..count` of a random model.
pub fn random_instances(model: &model::RandomModel, count: u64) -> Result<Vec<Instance>> {
    (0..count)
        .map(|i| Ok(Instance::new(model.instance_id(i), model.instance(i)?)))
        .collect()
}

/// Maps `f` over `items` on all available cores; results come back in input
/// order, so output does not depend on scheduling.
pub fn par_map<T: Sync, R: Send>(items: Vec<T>, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                scope.spawn(move || part.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}
