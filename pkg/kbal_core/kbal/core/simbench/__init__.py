from kbal.core.simbench.dgp import (
    DgpFamily,
    DgpSpec,
    gen_hainmueller,
    gen_kang_schafer,
    gen_uniform,
    generate,
    OutcomeDesign,
    replication_rng,
)
from kbal.core.simbench.replications import run_replications, SimulationSummary, summarize
from kbal.core.simbench.tables import (
    markdown_table,
    summaries_to_frame,
    write_csv,
    write_excel,
    write_markdown,
)
from kbal.core.simbench.truth import cell_truth, closed_form_truth, monte_carlo_truth

__all__ = [
    "DgpFamily",
    "DgpSpec",
    "OutcomeDesign",
    "gen_kang_schafer",
    "gen_hainmueller",
    "gen_uniform",
    "generate",
    "replication_rng",
    "closed_form_truth",
    "monte_carlo_truth",
    "cell_truth",
    "SimulationSummary",
    "run_replications",
    "summarize",
    "summaries_to_frame",
    "markdown_table",
    "write_csv",
    "write_markdown",
    "write_excel",
]
