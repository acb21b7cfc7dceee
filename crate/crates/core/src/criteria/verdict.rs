use std::fmt;

use crate::records::Records;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Exhaustive,
    CommutingPairs,
    Centralizer,
    SylowCentralizer,
    Sampled,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::CommutingPairs => "commuting-pairs",
            Method::Centralizer => "centralizer",
            Method::SylowCentralizer => "sylow-centralizer",
            Method::Sampled => "sampled",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Eppo,
    NotEppo,
    /// No counterexample among the sampled elements. Never a proof.
    SampledConsistent,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Eppo => "eppo",
            Status::NotEppo => "not-eppo",
            Status::SampledConsistent => "sampled-consistent",
        }
    }
}

/// Evidence that a group is not EPPO, in the shape each criterion produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<E> {
    /// An element whose order is not a prime power.
    CompositeOrder { element: E, order: u64 },
    /// Commuting nontrivial elements of coprime orders.
    CommutingPair { x: E, y: E, order_x: u64, order_y: u64 },
    /// A nontrivial element centralizing both `x` and `y`, of coprime orders.
    CentralizerMeet { x: E, y: E, common: E },
    /// An element of prime order whose centralizer is not a `prime`-group.
    CentralizerNotPGroup { x: E, prime: u64, centralizer_order: u64 },
}

impl<E> Witness<E> {
    pub fn map<F>(self, mut f: impl FnMut(E) -> F) -> Witness<F> {
        match self {
            Witness::CompositeOrder { element, order } => Witness::CompositeOrder { element: f(element), order },
            Witness::CommutingPair { x, y, order_x, order_y } => {
                Witness::CommutingPair { x: f(x), y: f(y), order_x, order_y }
            }
            Witness::CentralizerMeet { x, y, common } => {
                Witness::CentralizerMeet { x: f(x), y: f(y), common: f(common) }
            }
            Witness::CentralizerNotPGroup { x, prime, centralizer_order } => {
                Witness::CentralizerNotPGroup { x: f(x), prime, centralizer_order }
            }
        }
    }
}

impl<E: fmt::Display> Witness<E> {
    /// The element order exhibited by the witness, when there is one.
    pub fn composite_order(&self) -> Option<u64> {
        match self {
            Witness::CompositeOrder { order, .. } => Some(*order),
            Witness::CommutingPair { order_x, order_y, .. } => Some(order_x * order_y),
            _ => None,
        }
    }

    pub fn write(&self, out: &mut Records, prefix: &str) {
        match self {
            Witness::CompositeOrder { element, order } => {
                out.push(format!("{prefix}.kind"), "composite-order");
                out.push(format!("{prefix}.element"), element);
                out.push(format!("{prefix}.order"), order);
            }
            Witness::CommutingPair { x, y, order_x, order_y } => {
                out.push(format!("{prefix}.kind"), "commuting-pair");
                out.push(format!("{prefix}.x"), x);
                out.push(format!("{prefix}.y"), y);
                out.push(format!("{prefix}.order_x"), order_x);
                out.push(format!("{prefix}.order_y"), order_y);
            }
            Witness::CentralizerMeet { x, y, common } => {
                out.push(format!("{prefix}.kind"), "centralizer-meet");
                out.push(format!("{prefix}.x"), x);
                out.push(format!("{prefix}.y"), y);
                out.push(format!("{prefix}.common"), common);
            }
            Witness::CentralizerNotPGroup { x, prime, centralizer_order } => {
                out.push(format!("{prefix}.kind"), "centralizer-not-p-group");
                out.push(format!("{prefix}.x"), x);
                out.push(format!("{prefix}.prime"), prime);
                out.push(format!("{prefix}.centralizer_order"), centralizer_order);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EppoVerdict<E> {
    pub status: Status,
    pub method: Method,
    pub witness: Option<Witness<E>>,
    pub sample_count: Option<u64>,
    pub seed: Option<u64>,
}

impl<E> EppoVerdict<E> {
    pub fn map<F>(self, f: impl FnMut(E) -> F) -> EppoVerdict<F> {
        EppoVerdict {
            status: self.status,
            method: self.method,
            witness: self.witness.map(|w| w.map(f)),
            sample_count: self.sample_count,
            seed: self.seed,
        }
    }
}

impl<E: fmt::Display> EppoVerdict<E> {
    pub(crate) fn definite(method: Method, witness: Option<Witness<E>>) -> Self {
        EppoVerdict {
            status: if witness.is_some() { Status::NotEppo } else { Status::Eppo },
            method,
            witness,
            sample_count: None,
            seed: None,
        }
    }

    /// True only for a definitive positive.
    pub fn is_eppo(&self) -> bool {
        self.status == Status::Eppo
    }

    pub fn is_not_eppo(&self) -> bool {
        self.status == Status::NotEppo
    }

    pub fn write(&self, out: &mut Records, prefix: &str) {
        out.push(format!("{prefix}.method"), self.method);
        out.push(format!("{prefix}.status"), self.status.name());
        if let Some(n) = self.sample_count {
            out.push(format!("{prefix}.samples"), n);
        }
        if let Some(seed) = self.seed {
            out.push(format!("{prefix}.seed"), seed);
        }
        if let Some(w) = &self.witness {
            w.write(out, &format!("{prefix}.witness"));
        }
    }
}
