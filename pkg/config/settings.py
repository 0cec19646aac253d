import os
from pathlib import Path
from dotenv import load_dotenv

# Chemins de base
ROOT_DIR = Path(__file__).parent.parent

# Chargement du fichier .env à la racine (seule variable lue : STBC_THREADS)
load_dotenv(ROOT_DIR / ".env")

# Parallélisme
## Surcharge optionnelle du nombre de workers (1 = exécution séquentielle)
THREADS = max(1, int(os.getenv('STBC_THREADS', '1') or 1))

# Certificats de norme
NORM_CONFIG = {
    "radius_sq": 50,  # Rayon² du disque de recherche de témoins
    "denominators": (1, 2),  # Dénominateurs m des témoins (u + v·α1)/m
}

# Recherche de codes optimaux
SEARCH_CONFIG = {
    "include_boundary": False,  # Élagage strict de p, comme dans les preuves
    "threads": THREADS,
}

# Reproduction de la table
TABLE_CONFIG = {
    "tolerance": 5e-4,  # Écart toléré entre rho recalculé et rho imprimé
}

# Simulation Monte Carlo
SIM_CONFIG = {
    "codebook_cap": 4096,  # Taille maximale du dictionnaire pour le décodage ML exhaustif
    "confidence_z": 1.96,  # Quantile normal pour l'intervalle à 95 %
    "chunk_elements": 2_000_000,  # Nb max d'éléments (essais × mots) par bloc de décodage
    "default_snr_db": (0.0, 6.0, 12.0, 18.0),
    "default_trials": 2000,
    "default_seed": 2024,
}

# Ligne de commande
CLI_CONFIG = {
    "exit_ok": 0,
    "exit_error": 1,
    "exit_flagged": 2,
    "log_format": "%(levelname)s %(name)s: %(message)s",
}
