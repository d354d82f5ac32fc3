from setuptools import setup, find_namespace_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

RUNTIME = [
    "python-dotenv>=1.0.0",
    "numpy>=1.24.0",
    "networkx>=3.1",
    "sympy>=1.12",
    "click>=8.1.0",
    "rich>=13.0.0",
    "tqdm>=4.65.0",
]

setup(
    name="algpos",
    version="1.0.0",
    description="Algebraic positivity oracles and the 3x3 sign pattern classification",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_namespace_packages(include=["src", "src.*"]),
    package_data={"src.classify": ["data/*.json"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=RUNTIME,
    extras_require={
        "dev": [
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.5.0",
            "pre-commit>=3.3.0",
        ],
        "test": [
            "pytest>=7.4.0",
            "pytest-mock>=3.11.0",
            "pytest-cov>=4.1.0",
            "pytest-xdist>=3.3.0",
            "hypothesis>=6.82.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "algpos=src.main:main",
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
