"""Setup script for the spacetime_born package."""
from setuptools import setup, find_packages

setup(
    name="spacetime_born",
    version="0.1.0",
    description="Spacetime-averaged energy expectation values versus the Born rule",
    author="idolgoff",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "python-dotenv>=1.0.0",
        "colorlog>=6.7.0",
        "pydantic>=2.5.2",
        "numpy>=1.24",
        "scipy>=1.10",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-mock>=3.10.0",
            "hypothesis>=6.80",
        ],
        "test": ["pytest", "pytest-cov"],
    },
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    entry_points={
        "console_scripts": [
            "spacetime-born=spacetime_born.cli:main",
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
