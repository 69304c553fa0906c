//! Shared workloads for the pipeline benchmarks.

use arasent_core::synthetic::{fixture_corpus, toy_bundle};
use arasent_core::svm::featurize;
use arasent_core::{Dataset, FeatureVector, Label, LexiconBundle};

pub struct Workload {
    pub corpus: Dataset,
    pub bundle: LexiconBundle,
    pub vectors: Vec<FeatureVector>,
    pub labels: Vec<Label>,
}

pub fn workload() -> Workload {
    let corpus = fixture_corpus();
    let bundle = toy_bundle();
    let vectors = featurize(&corpus, &bundle);
    let labels = corpus.labels().expect("fixture is labeled");
    Workload { corpus, bundle, vectors, labels }
}
