use std::collections::BTreeSet;

use crate::catalog::{simple_eppo_list, Fixture};
use crate::criteria::{spectrum_sampled, table_spectrum, Spectrum, Witness};
use crate::perm::{PermGroup, Permutation};
use crate::records::{join, Records};
use crate::{Limits, Result};

use super::{chief_series, chief_series_pattern, ChiefSeries, PatternReport};

#[derive(Clone, Debug)]
pub enum Classification {
    NotEppo {
        witness: Witness<Permutation>,
    },
    SolvableEppo {
        series: ChiefSeries,
        pattern: Box<PatternReport>,
    },
    /// Nonabelian simple, matched by order and spectrum against the catalog.
    SimpleEppo {
        name: String,
    },
    /// At least three prime divisors and every nontrivial element of prime order.
    A5Recognized,
    EppoUnclassified,
    /// Too large to enumerate and no composite order among the samples.
    SampledConsistent {
        candidate: Option<String>,
    },
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::NotEppo { .. } => "not-eppo",
            Classification::SolvableEppo { .. } => "solvable-eppo",
            Classification::SimpleEppo { .. } => "simple-eppo",
            Classification::A5Recognized => "a5-recognized",
            Classification::EppoUnclassified => "eppo-unclassified",
            Classification::SampledConsistent { .. } => "sampled-consistent",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub verdict: Classification,
    pub order: u64,
    pub spectrum: Spectrum<Permutation>,
    pub simple: Option<bool>,
    pub solvable: Option<bool>,
    /// Catalog entry with the same order and spectrum, when simple.
    pub catalog_match: Option<String>,
}

impl ClassificationRecord {
    pub fn write(&self, out: &mut Records, prefix: &str) {
        out.push(format!("{prefix}.verdict"), self.verdict.name());
        out.push(format!("{prefix}.order"), self.order);
        self.spectrum.write(out, &format!("{prefix}.spectrum"));
        if let Some(s) = self.simple {
            out.push(format!("{prefix}.simple"), s);
        }
        if let Some(s) = self.solvable {
            out.push(format!("{prefix}.solvable"), s);
        }
        if let Some(name) = &self.catalog_match {
            out.push(format!("{prefix}.catalog"), name);
        }
        match &self.verdict {
            Classification::NotEppo { witness } => witness.write(out, &format!("{prefix}.witness")),
            Classification::SolvableEppo { series, pattern } => {
                series.write(out, &format!("{prefix}.chief"));
                pattern.write(out, &format!("{prefix}.pattern"));
            }
            Classification::SampledConsistent { candidate: Some(c) } => {
                out.push(format!("{prefix}.candidate"), c);
            }
            _ => {}
        }
    }
}

/// At least three prime divisors and only prime element orders. Such a
/// group is isomorphic to A5.
pub fn recognizes_a5<E>(spectrum: &Spectrum<E>) -> bool {
    !spectrum.is_sampled() && spectrum.primes().len() >= 3 && spectrum.all_prime()
}

fn catalog_match(order: u64, orders: &BTreeSet<u64>, fixture: &Fixture) -> Option<String> {
    simple_eppo_list()
        .into_iter()
        .find(|e| e.expected_order == order && e.expected_spectrum(fixture).as_ref() == Some(orders))
        .map(|e| e.name)
}

/// Decides EPPO status and, for EPPO groups, the structural class. Groups
/// above the enumeration threshold get sampled evidence only.
pub fn classify(
    group: &PermGroup,
    limits: &Limits,
    samples: u64,
    seed: u64,
    fixture: &Fixture,
) -> Result<ClassificationRecord> {
    let order = group.order();
    if order > limits.enumeration {
        let spectrum = spectrum_sampled(group, samples, seed);
        let verdict = match &spectrum.witness {
            Some((element, o)) => {
                Classification::NotEppo { witness: Witness::CompositeOrder { element: element.clone(), order: *o } }
            }
            None => Classification::SampledConsistent {
                candidate: simple_eppo_list().into_iter().find(|e| e.expected_order == order).map(|e| e.name),
            },
        };
        return Ok(ClassificationRecord {
            verdict,
            order,
            spectrum,
            simple: None,
            solvable: None,
            catalog_match: None,
        });
    }
    let table = group.table(limits)?;
    let spectrum = table_spectrum(&table);
    if let Some((element, o)) = &spectrum.witness {
        let verdict =
            Classification::NotEppo { witness: Witness::CompositeOrder { element: element.clone(), order: *o } };
        return Ok(ClassificationRecord {
            verdict,
            order,
            spectrum,
            simple: None,
            solvable: None,
            catalog_match: None,
        });
    }
    let solvable = table.is_solvable();
    let simple = table.is_nonabelian_simple();
    let catalog = if simple { catalog_match(order, &spectrum.orders, fixture) } else { None };
    let verdict = if recognizes_a5(&spectrum) {
        let corroborated = order == 60 && spectrum.orders == BTreeSet::from([1, 2, 3, 5]) && simple;
        assert!(
            corroborated,
            "A5 recognizer fired without corroborating evidence (order {order}, spectrum {})",
            join(&spectrum.orders)
        );
        Classification::A5Recognized
    } else if solvable {
        Classification::SolvableEppo { series: chief_series(&table), pattern: Box::new(chief_series_pattern(&table)?) }
    } else if let Some(name) = &catalog {
        Classification::SimpleEppo { name: name.clone() }
    } else {
        Classification::EppoUnclassified
    };
    Ok(ClassificationRecord {
        verdict,
        order,
        spectrum,
        simple: Some(simple),
        solvable: Some(solvable),
        catalog_match: catalog,
    })
}
