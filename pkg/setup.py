from setuptools import setup, find_packages

# Dependencias del núcleo: álgebra exacta (sympy), integración numérica de
# la holonomía (numpy + scipy), reportes (pydantic) y configuración
# (PyYAML, python-dotenv, jsonschema).
CORE_REQUIRES = [
    "sympy>=1.12",        # Q(i), polinomios, resultantes, factorización
    "numpy",
    "scipy",              # solve_ivp para el lazo de holonomía
    "pydantic>=2",        # esquema de los reportes JSON
    "PyYAML",             # config.py carga YAML
    "python-dotenv",
    "jsonschema",         # validación de los archivos de configuración
]

EXTRAS = {
    "dev": [
        "pytest",
        "hypothesis",     # propiedades algebraicas (d² = 0, Leibniz, ...)
        "build",
        "twine",
    ],
}
# Meta-extra "all": instala todo excepto dev.
EXTRAS["all"] = sorted({pkg for name, lst in EXTRAS.items() if name != "dev" for pkg in lst})


with open("README.md", encoding="utf-8") as f:
    LONG_DESCRIPTION = f.read()


setup(
    name="folcalc",
    version="0.1.0",
    packages=find_packages(exclude=("test", "test.*")),
    install_requires=CORE_REQUIRES,
    extras_require=EXTRAS,
    description="Cálculo exacto con foliaciones holomorfas polinomiales del plano.",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "folcalc=folcalc.cli.main:main",
        ],
    },
    include_package_data=True,
)
