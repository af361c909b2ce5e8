from modules.util.exceptions.domain_exception import DomainException


class NonIntegralCoefficientException(DomainException):
    pass
