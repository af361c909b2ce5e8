from modules.util.exceptions.domain_exception import DomainException


class EmptyInputException(DomainException):
    pass
