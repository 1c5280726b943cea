"""
Exact computation layer: weighted algebras (``algebra``), split graded modules
and their HN filtrations (``modules``), and valuative functions with the
Hecke-transform descent (``valuative``).
"""
