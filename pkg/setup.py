# setup.py

from setuptools import find_packages, setup

setup(
    name="posray",
    version="0.1.0",
    description="Positroids from Le-diagrams: bases, Rayleigh checks, marker-walk injection",
    python_requires=">=3.9",
    py_modules=[
        "config",
        "diagram_validator",
        "injection",
        "lediagram",
        "main",
        "positroid",
        "rayleigh",
        "report_format",
    ],
    packages=find_packages(include=["managers", "models", "utils"]),
    install_requires=[
        "python-dotenv>=1.0.0",
        "pydantic>=2.0",
        "networkx>=3.1",
    ],
    entry_points={"console_scripts": ["posray=main:main"]},
)
