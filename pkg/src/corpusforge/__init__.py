"""Multilingual corpus engineering toolkit.

Subpackages:

- ``lid``       — character n-gram language identification (train/predict/explain)
- ``monoclean`` — paragraph-to-sentence monolingual cleaning pipeline
- ``mine``      — margin-based bitext mining over sentence embeddings
- ``bifilter``  — bitext filtering (alignment score, length, LID, toxicity, dedup)
- ``toxicity``  — wordlist-based toxicity detection and evaluation
- ``evalkit``   — translation metrics (chrF++, BLEU, spBLEU, CER, dialectness)
- ``xsts``      — human-rating aggregation and calibration
- ``moegate``   — forward-only sparse expert-routing kernel and curriculum planner
- ``service``   — FastAPI wrapper exposing the request/response operations
"""

__version__ = "0.1.0"
