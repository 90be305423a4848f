"""Exception types shared across the toolkit."""


class QCrawlError(Exception):
    """Base class for all toolkit errors."""


class CorpusFormatError(QCrawlError):
    """Malformed input file (bad line, bad header, duplicate doc_id)."""


class UnknownDoc(QCrawlError):
    """A doc_id was requested that the corpus or graph does not contain."""


class EmptyText(QCrawlError):
    """The reference scorer was given a text with zero tokens."""


class MissingScore(QCrawlError):
    """A doc_id has no entry in the score table."""


class NoOutlinks(QCrawlError):
    """Mean outlink quality requested for a page without outlinks."""


class SkippedQuery(QCrawlError):
    """Recall is undefined: the query has no judged-relevant documents."""


class UndefinedCorrelation(QCrawlError):
    """Pearson correlation is undefined (zero variance in a series)."""


class ZeroWidth(QCrawlError):
    """Histogram range collapses to a single point."""
