"""ompmentor: a dialog-document Q&A engine for common OpenMP mistakes.

Subpackages:

* ``dialogdoc``   -- XML dialog-document model, parser, serializer, validator
* ``matching``    -- normalization, wildcard patterns, ranked matching
* ``conversation``-- session state machine and unmatched-question log
* ``kb``          -- the bilingual mistake catalog and document builder
* ``advisor``     -- heuristic pragma scanner mapping code to catalog entries
* ``eval_harness``-- paraphrase-corpus accuracy and Likert percentages
* ``service``     -- HTTP/JSON API
* ``cli``         -- ompmentor command-line tool
"""

__version__ = "0.1.0"
