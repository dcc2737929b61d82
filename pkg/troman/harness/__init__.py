from .corpus import (
    AllConnected,
    CorpusSpec,
    FamiliesCorpus,
    FileCorpus,
    RandomCorpus,
)
from .theorems import CATALOG, HOLDS, VACUOUS, Theorem, theorem_ids
from .runner import (
    SuiteConfigSchema,
    SuiteReport,
    TheoremResult,
    load_suite_config,
    run_configured_suite,
    run_suite,
    select_theorems,
)
