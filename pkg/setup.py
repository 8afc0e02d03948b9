from setuptools import setup, find_packages

setup(
    name='proxlaw',
    version='0.1.0',
    description='Hub persistence analysis across multilayer network layers',
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    py_modules=['config', 'errors'],
    install_requires=[
        'pydantic>=2.0',
        'pydantic-settings>=2.0',
        'python-dotenv>=1.0',
        'aiofiles>=23.1.0',
        'numpy>=1.22',
        'scipy>=1.8',
        'pandas>=1.4',
    ],
    entry_points={'console_scripts': ['proxlaw=cli.main:main']},
    python_requires='>=3.9',
)
