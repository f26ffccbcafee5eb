"""Deterministic generation of the labeled trace corpus."""

from .corpus import CorpusManifest, ManifestEntry, generate_corpus, load_manifest
from .programs import Program, registry, run_program
from .recorder import Recorder, VariantKnobs
from .vectors import VectorReport, self_test_vectors

__all__ = [
    "CorpusManifest",
    "ManifestEntry",
    "Program",
    "Recorder",
    "VariantKnobs",
    "VectorReport",
    "generate_corpus",
    "load_manifest",
    "registry",
    "run_program",
    "self_test_vectors",
]
