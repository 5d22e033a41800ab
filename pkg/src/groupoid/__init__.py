"""
Grupoides de reflexiones sobre orientaciones de un árbol: palabras, forma normal, lazos y lemas.
"""

from .words import (
    Letter,
    DUAL,
    Sigma,
    Word,
    NormalForm,
    parse_letters,
    apply_word,
    normal_form,
    is_reduced,
    check_inbetween,
    word_action_on_roots,
    inverse,
)
from .loops import LoopReport, classify_loops, loop_counts, conjugation_check, default_max_len
from .lemmas import LemmaReport, reduced_words, check_lemmas, relation_soundness, action_compatibility

__all__ = [
    'Letter',
    'DUAL',
    'Sigma',
    'Word',
    'NormalForm',
    'parse_letters',
    'apply_word',
    'normal_form',
    'is_reduced',
    'check_inbetween',
    'word_action_on_roots',
    'inverse',
    'LoopReport',
    'classify_loops',
    'loop_counts',
    'conjugation_check',
    'default_max_len',
    'LemmaReport',
    'reduced_words',
    'check_lemmas',
    'relation_soundness',
    'action_compatibility',
]
