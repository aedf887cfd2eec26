"""Packaged data files for the reference lexicon build.

tags_reference.txt       raw tag names, one per line, as collected from
                         public Q&A tag directories (data-related subset)
exclusions_default.txt   tags too generic to track as skills
aliases_default.txt      extra literal surfaces attached to canonicals
"""
