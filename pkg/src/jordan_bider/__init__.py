"""
Exact computation of biderivations, centroids and triple homomorphisms
of finite-dimensional Jordan algebras
"""
__version__ = "0.1.0"
