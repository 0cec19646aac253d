"""
Exceptions communes à toute la bibliothèque

Hiérarchie :
- StbcError : base, interceptée par la CLI (code de sortie 1)
  - ParameterError : paramètre de corps invalide ou incohérent, option mal formée
  - DomainError : opération hors de son domaine (inverse de zéro, γ = 0, ...)
    - ReduciblePolynomialError : le polynôme a une racine dans F
    - GammaIsNormError : γ est une norme relative (le code n'est pas de division)
  - ConfigError : configuration de simulation ou de classement invalide
"""


class StbcError(Exception):
    """Erreur de base de la bibliothèque"""


class ParameterError(StbcError, ValueError):
    """Paramètre invalide (d non sans facteur carré, corps différents, option mal formée)"""


class DomainError(StbcError, ValueError):
    """Opération appliquée hors de son domaine"""


class ReduciblePolynomialError(DomainError):
    """Le polynôme x² + px + q est réductible sur F"""

    def __init__(self, poly, root=None):
        self.poly = poly
        self.root = root  # racine carrée du discriminant dans F
        super().__init__(f"reducible: {poly} (√disc = {root})")


class GammaIsNormError(DomainError):
    """γ est la norme relative d'un élément de K : le code perd sa diversité"""

    def __init__(self, gamma, witness):
        self.gamma = gamma
        self.witness = witness
        super().__init__(f"gamma-is-norm: γ = {gamma} = N({witness})")


class ConfigError(StbcError, ValueError):
    """Configuration de simulation invalide"""
