from modules.util.exceptions.domain_exception import DomainException


class CrossingPairsException(DomainException):
    pass
